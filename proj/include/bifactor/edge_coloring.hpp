#pragma once

#include <optional>
#include <string>

#include "bifactor/graph.hpp"

namespace bifactor {

inline constexpr std::size_t unassigned_color = static_cast<std::size_t>(-1);

// Edge -> color map over a declared palette 0..k-1. The map may be partial
// while a coloring is being built; verify_coloring requires totality.
// set_color deliberately accepts any value so that tests can build invalid
// colorings and watch the verifier reject them.
class EdgeColoring {
public:
    EdgeColoring(std::size_t k, std::size_t edge_count)
        : k_(k), color_(edge_count, unassigned_color) {}

    std::size_t palette_size() const noexcept { return k_; }
    std::size_t edge_count() const noexcept { return color_.size(); }

    std::size_t color_of(EdgeId e) const;
    bool is_assigned(EdgeId e) const { return color_of(e) != unassigned_color; }
    bool is_total() const noexcept;

    void set_color(EdgeId e, std::size_t color);
    void clear_color(EdgeId e) { set_color(e, unassigned_color); }

    const std::vector<std::size_t>& assignments() const noexcept { return color_; }

    bool operator==(const EdgeColoring&) const = default;

private:
    std::size_t k_;
    std::vector<std::size_t> color_;
};

// Maximal trail from `start` whose edges alternate between two fixed colors.
// On a proper coloring the two-colored subgraph has maximum degree 2, so the
// trail is uniquely determined by its start and the color pair and takes one
// of two shapes: an open path ending at a vertex missing the next wanted
// color (all vertices distinct), or — when `start` lies on an alternating
// cycle — that whole cycle, closed, with vertices.front() == vertices.back().
// vertices has edges.size()+1 entries either way.
struct AlternatingPath {
    VertexId start{};
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;
};

// Properly colors all edges with at most k colors, k >= max_degree. Edges are
// inserted in EdgeId order; each insertion either takes the lowest color free
// at both endpoints or swaps one alternating path and then takes the freed
// color. Deterministic. Throws Error(k_too_small) when k < max_degree.
EdgeColoring color_edges(const BipartiteMultigraph& g, std::size_t k);

// One insertion step on an existing proper partial coloring: colors edge e,
// recoloring at most one alternating path. `partial` must be proper, leave e
// unassigned, and both endpoints of e must have fewer than k colored incident
// edges; violations raise Error(improper_coloring). Alternating-path
// anomalies (impossible on a well-formed bipartite input) raise
// Error(internal_invariant_violation).
EdgeColoring insert_and_recolor(const EdgeColoring& partial,
                                const BipartiteMultigraph& g, EdgeId e);

// The maximal alternating trail from `start`, exposed for inspection; the
// recoloring step traces it from a vertex missing color_b, which rules out
// the closed-cycle shape. `coloring` must be proper (partial is fine).
AlternatingPath trace_alternating_path(const BipartiteMultigraph& g,
                                       const EdgeColoring& coloring,
                                       VertexId start,
                                       std::size_t color_a, std::size_t color_b);

struct ColoringViolation {
    enum class Kind { Unassigned, ColorOutOfRange, AdjacentClash };

    Kind kind{Kind::Unassigned};
    EdgeId edge_a = no_edge;
    EdgeId edge_b = no_edge; // AdjacentClash only
    VertexId vertex{};       // AdjacentClash only

    std::string describe() const;
};

// First violation in a deterministic scan (edges ascending for totality and
// range, then vertices ascending for clashes), or nullopt if the coloring is
// a proper total coloring of g.
std::optional<ColoringViolation> find_coloring_violation(const BipartiteMultigraph& g,
                                                         const EdgeColoring& coloring);

bool verify_coloring(const BipartiteMultigraph& g, const EdgeColoring& coloring);

} // namespace bifactor
