#include "bifactor/graph.hpp"

#include <algorithm>
#include <deque>

namespace bifactor {

const char* error_name(errc code) noexcept {
    switch (code) {
    case errc::index_out_of_bounds:           return "IndexOutOfBounds";
    case errc::self_loop:                     return "SelfLoop";
    case errc::not_bipartite:                 return "NotBipartite";
    case errc::k_too_small:                   return "KTooSmall";
    case errc::improper_coloring:             return "ImproperColoring";
    case errc::internal_invariant_violation:  return "InternalInvariantViolation";
    case errc::not_regular:                   return "NotRegular";
    case errc::zero_degree:                   return "ZeroDegree";
    case errc::not_divisible:                 return "NotDivisible";
    case errc::d_too_large:                   return "DTooLarge";
    case errc::not_power_of_two:              return "NotPowerOfTwo";
    case errc::invalid_factor:                return "InvalidFactor";
    case errc::negative_entry:                return "NegativeEntry";
    case errc::non_integer_entry:             return "NonIntegerEntry";
    case errc::unequal_line_sums:             return "UnequalLineSums";
    case errc::zero_sum:                      return "ZeroSum";
    case errc::irregular_support:             return "IrregularSupport";
    case errc::too_large:                     return "TooLarge";
    case errc::infeasible:                    return "Infeasible";
    case errc::unknown_fixture:               return "UnknownFixture";
    case errc::parse_error:                   return "ParseError";
    }
    return "UnknownError";
}

// ---------------------------------------------------------------------------
// BipartiteMultigraph

BipartiteMultigraph::BipartiteMultigraph(
    std::size_t n_left, std::size_t n_right,
    const std::vector<std::pair<std::size_t, std::size_t>>& edge_list)
    : n_left_(n_left), n_right_(n_right) {
    edges_.reserve(edge_list.size());
    adjacency_.assign(n_left_ + n_right_, {});
    for (const auto& [l, r] : edge_list) {
        if (l >= n_left_ || r >= n_right_) {
            throw Error(errc::index_out_of_bounds,
                        "edge (" + std::to_string(l) + ", " + std::to_string(r) +
                            ") is outside a " + std::to_string(n_left_) + "+" +
                            std::to_string(n_right_) + " vertex bipartition");
        }
        EdgeId id = edges_.size();
        edges_.emplace_back(l, r);
        adjacency_[l].push_back(id);
        adjacency_[n_left_ + r].push_back(id);
    }
}

std::size_t BipartiteMultigraph::left_of(EdgeId e) const {
    if (e >= edges_.size())
        throw Error(errc::index_out_of_bounds, "edge id " + std::to_string(e) + " out of range");
    return edges_[e].first;
}

std::size_t BipartiteMultigraph::right_of(EdgeId e) const {
    if (e >= edges_.size())
        throw Error(errc::index_out_of_bounds, "edge id " + std::to_string(e) + " out of range");
    return edges_[e].second;
}

VertexId BipartiteMultigraph::other_endpoint(EdgeId e, VertexId v) const {
    std::size_t l = left_of(e);
    std::size_t r = edges_[e].second;
    if (v.side == Side::Left && v.index == l) return right_vertex(r);
    if (v.side == Side::Right && v.index == r) return left_vertex(l);
    throw Error(errc::index_out_of_bounds, "vertex is not an endpoint of edge " + std::to_string(e));
}

std::span<const EdgeId> BipartiteMultigraph::incident(VertexId v) const {
    return adjacency_[flat_index(v)];
}

std::size_t BipartiteMultigraph::degree(VertexId v) const {
    return adjacency_[flat_index(v)].size();
}

std::size_t BipartiteMultigraph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adjacency_) d = std::max(d, a.size());
    return d;
}

std::optional<std::size_t> BipartiteMultigraph::regular_degree() const noexcept {
    if (adjacency_.empty()) return 0;
    std::size_t d = adjacency_.front().size();
    for (const auto& a : adjacency_)
        if (a.size() != d) return std::nullopt;
    return d;
}

std::size_t BipartiteMultigraph::flat_index(VertexId v) const {
    std::size_t bound = v.side == Side::Left ? n_left_ : n_right_;
    if (v.index >= bound)
        throw Error(errc::index_out_of_bounds,
                    std::string(v.side == Side::Left ? "left" : "right") + " vertex " +
                        std::to_string(v.index) + " out of range");
    return v.side == Side::Left ? v.index : n_left_ + v.index;
}

VertexId BipartiteMultigraph::vertex_from_flat(std::size_t flat) const {
    if (flat >= vertex_count())
        throw Error(errc::index_out_of_bounds, "flat vertex " + std::to_string(flat) + " out of range");
    return flat < n_left_ ? left_vertex(flat) : right_vertex(flat - n_left_);
}

// ---------------------------------------------------------------------------
// GeneralGraph

GeneralGraph::GeneralGraph(std::size_t n_vertices,
                           const std::vector<std::pair<std::size_t, std::size_t>>& edge_list)
    : n_(n_vertices) {
    edges_.reserve(edge_list.size());
    adjacency_.assign(n_, {});
    for (const auto& [u, v] : edge_list) {
        if (u >= n_ || v >= n_)
            throw Error(errc::index_out_of_bounds,
                        "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for " + std::to_string(n_) + " vertices");
        if (u == v)
            throw Error(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        EdgeId id = edges_.size();
        edges_.emplace_back(u, v);
        adjacency_[u].push_back(id);
        adjacency_[v].push_back(id);
    }
}

const std::pair<std::size_t, std::size_t>& GeneralGraph::endpoints(EdgeId e) const {
    if (e >= edges_.size())
        throw Error(errc::index_out_of_bounds, "edge id " + std::to_string(e) + " out of range");
    return edges_[e];
}

std::size_t GeneralGraph::other_endpoint(EdgeId e, std::size_t v) const {
    const auto& [a, b] = endpoints(e);
    if (v == a) return b;
    if (v == b) return a;
    throw Error(errc::index_out_of_bounds, "vertex is not an endpoint of edge " + std::to_string(e));
}

std::span<const EdgeId> GeneralGraph::incident(std::size_t v) const {
    if (v >= n_)
        throw Error(errc::index_out_of_bounds, "vertex " + std::to_string(v) + " out of range");
    return adjacency_[v];
}

std::size_t GeneralGraph::degree(std::size_t v) const { return incident(v).size(); }

std::size_t GeneralGraph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adjacency_) d = std::max(d, a.size());
    return d;
}

std::optional<std::size_t> GeneralGraph::regular_degree() const noexcept {
    if (adjacency_.empty()) return 0;
    std::size_t d = adjacency_.front().size();
    for (const auto& a : adjacency_)
        if (a.size() != d) return std::nullopt;
    return d;
}

// ---------------------------------------------------------------------------
// two_coloring and friends

namespace {

// Tree path from v up to its traversal root, as (vertices, edges) with v
// first. Roots have parent_edge == no_edge.
void chain_to_root(std::size_t v, const std::vector<EdgeId>& parent_edge,
                   const std::vector<std::size_t>& parent_vertex,
                   std::vector<std::size_t>& vertices, std::vector<EdgeId>& edges) {
    vertices.push_back(v);
    while (parent_edge[v] != no_edge) {
        edges.push_back(parent_edge[v]);
        v = parent_vertex[v];
        vertices.push_back(v);
    }
}

} // namespace

TwoColoringResult two_coloring(const GeneralGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> cls(n, -1);
    std::vector<EdgeId> parent_edge(n, no_edge);
    std::vector<std::size_t> parent_vertex(n, 0);
    std::deque<std::size_t> queue;

    for (std::size_t root = 0; root < n; ++root) {
        if (cls[root] != -1) continue;
        cls[root] = 0; // class I at every traversal root
        queue.clear();
        queue.push_back(root);
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident(u)) {
                std::size_t w = g.other_endpoint(e, u);
                if (cls[w] == -1) {
                    cls[w] = 1 - cls[u];
                    parent_edge[w] = e;
                    parent_vertex[w] = u;
                    queue.push_back(w);
                } else if (cls[w] == cls[u]) {
                    // Odd closed walk through the root: root..u, the edge
                    // (u,w), then w..root. The two tree paths have depths of
                    // equal parity, so the total length is odd.
                    std::vector<std::size_t> up_v, down_v;
                    std::vector<EdgeId> up_e, down_e;
                    chain_to_root(u, parent_edge, parent_vertex, up_v, up_e);
                    chain_to_root(w, parent_edge, parent_vertex, down_v, down_e);
                    OddWalk walk;
                    walk.vertices.assign(up_v.rbegin(), up_v.rend()); // root..u
                    walk.edges.assign(up_e.rbegin(), up_e.rend());
                    walk.edges.push_back(e);
                    walk.vertices.insert(walk.vertices.end(), down_v.begin(), down_v.end()); // w..root
                    walk.edges.insert(walk.edges.end(), down_e.begin(), down_e.end());
                    return walk;
                }
            }
        }
    }

    TwoClasses classes(n, Side::Left);
    for (std::size_t v = 0; v < n; ++v)
        classes[v] = cls[v] == 0 ? Side::Left : Side::Right;
    return classes;
}

BipartiteRelabeling as_bipartite(const GeneralGraph& g) {
    TwoColoringResult r = two_coloring(g);
    if (std::holds_alternative<OddWalk>(r)) {
        auto& walk = std::get<OddWalk>(r);
        throw NotBipartiteError(walk, "graph contains a closed walk of odd length " +
                                          std::to_string(walk.length()));
    }
    const auto& classes = std::get<TwoClasses>(r);

    std::vector<VertexId> vertex_map(g.vertex_count());
    std::size_t n_left = 0, n_right = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        vertex_map[v] = classes[v] == Side::Left ? left_vertex(n_left++) : right_vertex(n_right++);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (classes[u] == Side::Right) std::swap(u, v);
        edges.emplace_back(vertex_map[u].index, vertex_map[v].index);
    }
    return BipartiteRelabeling{BipartiteMultigraph(n_left, n_right, edges), std::move(vertex_map)};
}

GeneralGraph to_general(const BipartiteMultigraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        edges.emplace_back(g.left_of(e), g.left_count() + g.right_of(e));
    return GeneralGraph(g.vertex_count(), edges);
}

std::vector<Component> components(const BipartiteMultigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> comp(n, static_cast<std::size_t>(-1));
    std::size_t count = 0;
    std::deque<std::size_t> queue;

    // Flat vertex order is (Left block, Right block), which matches VertexId
    // order, so discovery order sorts components by smallest contained vertex.
    for (std::size_t root = 0; root < n; ++root) {
        if (comp[root] != static_cast<std::size_t>(-1)) continue;
        comp[root] = count;
        queue.clear();
        queue.push_back(root);
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (EdgeId e : g.incident(g.vertex_from_flat(u))) {
                std::size_t w = g.flat_index(g.other_endpoint(e, g.vertex_from_flat(u)));
                if (comp[w] == static_cast<std::size_t>(-1)) {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }

    std::vector<Component> result(count);
    for (std::size_t v = 0; v < n; ++v)
        result[comp[v]].vertices.push_back(g.vertex_from_flat(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        result[comp[g.left_of(e)]].edges.push_back(e);
    return result;
}

} // namespace bifactor
