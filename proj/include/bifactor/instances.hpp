#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "bifactor/graph.hpp"
#include "bifactor/matrix.hpp"

namespace bifactor {

// Wrapper so a seed is never confused with another integer parameter.
// Identical seed and parameters reproduce an instance bit for bit; the
// generators use their own bounded-draw on top of mt19937_64, whose output
// sequence the C++ standard fixes exactly.
struct Seed {
    std::uint64_t value = 0;
};

using Fixture = std::variant<GeneralGraph, BipartiteMultigraph, ExactMatrix>;

// Named instances used throughout the tests and docs:
//   cube        3-regular bipartite 4+4 (the graph of the 3-cube)
//   petersen    the Petersen graph (GeneralGraph; not two-colorable)
//   k33         complete bipartite 3x3
//   koenig_counterexample_matrix
//               [[0,0,1],[0,0,1],[1,1,-1]]: equal line sums but every
//               diagonal product is zero -- negativity breaks the guarantee
//   path2       path on two edges (bipartite, max degree 2, not regular)
//   four_cycle  2-regular bipartite 2+2
// Errors: unknown_fixture.
Fixture fixture(std::string_view name);

// Union of k uniformly random permutations of {0..n-1}: a k-regular bipartite
// multigraph on n+n vertices (parallel edges whenever permutations agree).
// Regularity is asserted post-generation.
BipartiteMultigraph random_regular_bipartite(std::size_t n, std::size_t k, Seed seed);

// edge_count edges drawn uniformly over the currently unsaturated endpoint
// pairs, so no degree ever exceeds max_degree. Errors: infeasible when either
// side cannot host edge_count edge endpoints (edge_count > side * max_degree).
BipartiteMultigraph random_bounded_degree_bipartite(std::size_t n_left, std::size_t n_right,
                                                    std::size_t max_degree,
                                                    std::size_t edge_count, Seed seed);

// Sum of s random permutation matrices: a nonnegative integer matrix whose
// row and column sums all equal s. Line sums are asserted post-generation.
ExactMatrix random_equal_line_sum_matrix(std::size_t n, std::size_t s, Seed seed);

} // namespace bifactor
