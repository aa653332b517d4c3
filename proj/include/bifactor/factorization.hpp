#pragma once

#include <optional>
#include <string>

#include "bifactor/edge_coloring.hpp"

namespace bifactor {

// Spanning edge set in which every vertex of the host graph has exactly
// `degree` incident edges. degree 1 is a perfect matching.
struct Factor {
    std::size_t degree = 0;
    std::vector<EdgeId> edges; // ascending

    bool operator==(const Factor&) const = default;
};

// Partition of the host's edges into factors.
struct Factorization {
    std::vector<Factor> factors;

    bool operator==(const Factorization&) const = default;
};

// Result of embedding a graph of maximum degree <= k into a k-regular host:
// the host contains the original (edge ids preserved through edge_map), a
// mirrored copy of it, and padding edges between each deficient vertex and
// its own copy. Copy vertices sit on the opposite side from their originals,
// so padding edges cross the bipartition.
struct RegularizationEmbedding {
    BipartiteMultigraph host;
    std::size_t k = 0;
    std::vector<VertexId> vertex_map;  // flat original vertex -> host vertex
    std::vector<EdgeId> edge_map;      // original EdgeId -> host EdgeId
    std::vector<EdgeId> padding_edges; // host ids of original<->copy edges
};

// Result of splitting a (mu*nu)-regular graph into a nu-regular one: each
// vertex becomes mu copies, each copy taking nu consecutive edges of the
// original adjacency list. Edge ids are preserved (edge_bijection is the
// identity on indices), so factors of the split lift to the original by a
// plain relabeling.
struct SplitEmbedding {
    BipartiteMultigraph split;
    std::size_t mu = 0;
    std::size_t nu = 0;
    std::vector<VertexId> vertex_map;   // flat split vertex -> original vertex
    std::vector<EdgeId> edge_bijection; // split EdgeId -> original EdgeId
};

// Perfect matching of a k-regular graph, k >= 1: color class 0 of the
// k-coloring. Errors: not_regular; zero_degree when k = 0 but vertices exist.
Factor perfect_matching(const BipartiteMultigraph& g);

// All k color classes of a k-regular graph; each is a perfect matching.
// A 0-regular graph yields an empty list. Errors: not_regular.
Factorization one_factorization(const BipartiteMultigraph& g);

// Embeds g (max degree <= k) into a k-regular host as described above.
// Errors: k_too_small.
RegularizationEmbedding regularize(const BipartiteMultigraph& g, std::size_t k);

// Alternative coloring engine: regularize, 1-factorize the host, and read
// each original edge's color off the factor containing its image.
// Errors: k_too_small.
EdgeColoring color_via_regularization(const BipartiteMultigraph& g, std::size_t k);

// Splits a (mu*nu)-regular graph into a nu-regular graph on mu-times as many
// vertices. Errors: not_regular; not_divisible (includes mu = 0).
SplitEmbedding split_degree(const BipartiteMultigraph& g, std::size_t mu);

// Lifts a degree-d factor of the split graph to a degree-(mu*d) factor of the
// original. Errors: invalid_factor when f is not a uniform-degree factor of
// the split graph or its declared degree is wrong.
Factor merge_factor(const SplitEmbedding& se, const Factor& f);

// Degree-d factor of a k-regular graph, 0 <= d <= k: the union of the first d
// color classes. The complement is a (k-d)-factor. Errors: not_regular,
// d_too_large.
Factor factor_of_degree(const BipartiteMultigraph& g, std::size_t d);

// Splits a 2-regular graph into two perfect matchings by walking its cycles
// and alternating; the lowest edge id of each cycle lands in factor 0.
// Errors: not_regular (also raised when the uniform degree is not 2).
Factorization split_cycles_factorization(const BipartiteMultigraph& g);

// 1-factorization of a 2^m-regular graph by recursive halving: split to a
// 2-regular graph, factor its cycles, merge each matching to a half-degree
// factor, recurse on both halves. Errors: not_regular, not_power_of_two.
Factorization power_of_two_factorization(const BipartiteMultigraph& g);

// True when f.edges are distinct, in range, and give every vertex of g
// exactly f.degree incident edges.
bool is_factor(const BipartiteMultigraph& g, const Factor& f);

// Nullopt when the factorization is valid for g: factors pairwise disjoint,
// union covering every edge exactly once, every factor uniform at its
// declared degree. Otherwise a description of the first problem found.
std::optional<std::string> find_factorization_violation(const BipartiteMultigraph& g,
                                                        const Factorization& f);

bool verify_factorization(const BipartiteMultigraph& g, const Factorization& f);

} // namespace bifactor
