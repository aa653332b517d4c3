#pragma once

#include <stdexcept>
#include <string>

namespace bifactor {

// Every failure the library can diagnose. The names returned by error_name()
// are stable and machine-readable; the CLI prints them verbatim.
enum class errc {
    index_out_of_bounds,
    self_loop,
    not_bipartite,
    k_too_small,
    improper_coloring,
    internal_invariant_violation,
    not_regular,
    zero_degree,
    not_divisible,
    d_too_large,
    not_power_of_two,
    invalid_factor,
    negative_entry,
    non_integer_entry,
    unequal_line_sums,
    zero_sum,
    irregular_support,
    too_large,
    infeasible,
    unknown_fixture,
    parse_error,
};

const char* error_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Malformed input text (graph/matrix files) or malformed CLI flags.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what_arg)
        : Error(errc::parse_error, what_arg) {}
};

} // namespace bifactor
