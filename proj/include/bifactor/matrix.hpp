#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bifactor/graph.hpp"

namespace bifactor {

// Exact arbitrary-precision rational; arithmetic never rounds.
using Rational = mpq_class;

// Square matrix of exact rationals, row-major, 0-based accessors.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t n) : n_(n), entries_(n * n, Rational(0)) {}

    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t size() const noexcept { return n_; }

    const Rational& at(std::size_t row, std::size_t col) const;
    Rational& at(std::size_t row, std::size_t col);

    Rational row_sum(std::size_t row) const;
    Rational column_sum(std::size_t col) const;

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<Rational> entries_;
};

// Permutation of {0..n-1}; images[i] is the column selected in row i.
struct Permutation {
    std::vector<std::size_t> images;

    bool operator==(const Permutation&) const = default;
};

// Ordered list of permutations certifying a decomposition; each part selects
// one cell per row and column and consumes one unit there, so the certificate
// is checked by permutation_sum / covers_support_exactly_once.
struct PermutationDecomposition {
    std::vector<Permutation> parts;

    bool operator==(const PermutationDecomposition&) const = default;
};

// Nonnegative integer matrix -> bipartite multigraph: entry a[i][k] becomes
// a[i][k] parallel edges between left i and right k, inserted in row-major
// cell order. Vertex degrees equal the line sums. Errors: negative_entry,
// non_integer_entry, too_large (an entry too big to expand into edges).
BipartiteMultigraph graph_from_matrix(const ExactMatrix& m);

// Clears denominators: returns (scale * m, scale) where scale is the least
// common multiple of all entry denominators, so the first component is an
// integer matrix. Errors: negative_entry.
std::pair<ExactMatrix, mpz_class> normalize_rational(const ExactMatrix& m);

// For a nonnegative matrix whose row and column sums all equal the same
// positive value, returns a permutation with every selected entry positive.
// Errors: negative_entry, unequal_line_sums, zero_sum.
Permutation nonzero_member(const ExactMatrix& m);

// Writes a nonnegative integer matrix with equal line sums s as the sum of
// exactly s permutation matrices (color-class order of the coloring engine).
// s = 0 yields an empty decomposition. Errors: negative_entry,
// non_integer_entry, unequal_line_sums.
PermutationDecomposition decompose_into_permutations(const ExactMatrix& m);

// For a matrix with exactly k nonzero entries in every row and column
// (values may be any nonzero rationals, signs ignored), returns k
// permutations that are nonzero members and together cover every nonzero
// cell exactly once. Errors: irregular_support.
PermutationDecomposition support_decomposition(const ExactMatrix& m);

// Exhaustive count of permutations whose selected entries are all nonzero.
// Independent of the coloring machinery; n <= 8. Errors: too_large.
std::size_t count_nonzero_members_bruteforce(const ExactMatrix& m);

// Sum of the parts' permutation matrices as an ExactMatrix.
ExactMatrix permutation_sum(const PermutationDecomposition& d, std::size_t n);

// True when the parts select only nonzero cells of m and hit each nonzero
// cell exactly once.
bool covers_support_exactly_once(const PermutationDecomposition& d, const ExactMatrix& m);

} // namespace bifactor
