#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "bifactor/error.hpp"

namespace bifactor {

enum class Side : std::uint8_t { Left = 0, Right = 1 };

// Vertex handle: a side plus a 0-based index within that side. The ordering
// (Left block first, then by index) fixes every "lowest vertex" tie-break
// used by the algorithms and by components().
struct VertexId {
    Side side{Side::Left};
    std::size_t index{0};

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline VertexId left_vertex(std::size_t i) { return VertexId{Side::Left, i}; }
inline VertexId right_vertex(std::size_t i) { return VertexId{Side::Right, i}; }

// Dense edge identity, 0..m-1 in insertion order. Parallel edges get distinct
// ids; every coloring, factor and path refers to edges by id only.
using EdgeId = std::size_t;
inline constexpr EdgeId no_edge = static_cast<EdgeId>(-1);

// Finite bipartite multigraph. Parallel edges are allowed (and essential);
// edge and adjacency order are exactly insertion order, so everything built
// on top is reproducible run to run.
class BipartiteMultigraph {
public:
    BipartiteMultigraph() : n_left_(0), n_right_(0) {} // the empty graph
    BipartiteMultigraph(std::size_t n_left, std::size_t n_right,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edge_list);

    std::size_t left_count() const noexcept { return n_left_; }
    std::size_t right_count() const noexcept { return n_right_; }
    std::size_t vertex_count() const noexcept { return n_left_ + n_right_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::size_t left_of(EdgeId e) const;
    std::size_t right_of(EdgeId e) const;
    VertexId other_endpoint(EdgeId e, VertexId v) const;

    // Incident edge ids in insertion order.
    std::span<const EdgeId> incident(VertexId v) const;
    std::size_t degree(VertexId v) const;
    std::size_t max_degree() const noexcept;
    // k iff every vertex on both sides has degree exactly k; a graph with no
    // vertices is 0-regular. nullopt when degrees differ.
    std::optional<std::size_t> regular_degree() const noexcept;

    // Flat numbering 0..n_left+n_right-1: the left block first, then right.
    std::size_t flat_index(VertexId v) const;
    VertexId vertex_from_flat(std::size_t flat) const;

    bool operator==(const BipartiteMultigraph&) const = default;

private:
    std::size_t n_left_;
    std::size_t n_right_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_; // (left, right)
    std::vector<std::vector<EdgeId>> adjacency_;             // by flat vertex
};

// Undirected multigraph without a fixed bipartition; self-loops are rejected
// at construction. Input type for two-colorability questions.
class GeneralGraph {
public:
    GeneralGraph(std::size_t n_vertices,
                 const std::vector<std::pair<std::size_t, std::size_t>>& edge_list);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::pair<std::size_t, std::size_t>& endpoints(EdgeId e) const;
    std::size_t other_endpoint(EdgeId e, std::size_t v) const;

    std::span<const EdgeId> incident(std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    std::size_t max_degree() const noexcept;
    std::optional<std::size_t> regular_degree() const noexcept;

    bool operator==(const GeneralGraph&) const = default;

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<EdgeId>> adjacency_;
};

// Certificate that a graph admits no two-coloring: a closed walk of odd
// length. vertices has edges.size()+1 entries, starts and ends at the same
// vertex, and edge i joins vertices[i] and vertices[i+1]. Vertices may
// repeat (it is a walk, not necessarily a cycle).
struct OddWalk {
    std::vector<std::size_t> vertices;
    std::vector<EdgeId> edges;

    std::size_t length() const noexcept { return edges.size(); }
};

class NotBipartiteError : public Error {
public:
    NotBipartiteError(OddWalk witness, const std::string& what_arg)
        : Error(errc::not_bipartite, what_arg), witness_(std::move(witness)) {}

    const OddWalk& witness() const noexcept { return witness_; }

private:
    OddWalk witness_;
};

// Per-vertex class assignment; Side::Left plays class I, Side::Right class II.
using TwoClasses = std::vector<Side>;
using TwoColoringResult = std::variant<TwoClasses, OddWalk>;

// Splits the vertices into two classes so that every edge crosses, or returns
// an odd closed walk showing that no such split exists. Deterministic:
// breadth-first traversal from the lowest-index unvisited vertex, class I at
// each traversal root, neighbors in adjacency (insertion) order.
TwoColoringResult two_coloring(const GeneralGraph& g);

struct BipartiteRelabeling {
    BipartiteMultigraph graph;        // edge ids match the input's edge ids
    std::vector<VertexId> vertex_map; // original vertex -> new handle
};

// Reshapes a two-colorable graph into a BipartiteMultigraph. Class-I vertices
// become the left side (indices in ascending original order), class II the
// right side; edge order is preserved. Throws NotBipartiteError otherwise.
BipartiteRelabeling as_bipartite(const GeneralGraph& g);

// Inverse embedding: left vertices become 0..n_left-1, right vertices follow;
// edge order is preserved.
GeneralGraph to_general(const BipartiteMultigraph& g);

struct Component {
    std::vector<VertexId> vertices; // ascending
    std::vector<EdgeId> edges;      // ascending
};

// Connected components, ordered by their smallest contained vertex. Isolated
// vertices form singleton components with no edges.
std::vector<Component> components(const BipartiteMultigraph& g);

} // namespace bifactor
