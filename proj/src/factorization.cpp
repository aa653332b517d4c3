#include "bifactor/factorization.hpp"

#include <algorithm>

namespace bifactor {

namespace {

std::size_t regular_degree_or_throw(const BipartiteMultigraph& g) {
    auto k = g.regular_degree();
    if (!k)
        throw Error(errc::not_regular, "graph is not regular: vertex degrees differ");
    return *k;
}

// Spanning subgraph of g keeping only `edges` (ascending); to_host maps the
// subgraph's edge ids back to g's.
struct EdgeSubgraph {
    BipartiteMultigraph graph;
    std::vector<EdgeId> to_host;
};

EdgeSubgraph edge_subgraph(const BipartiteMultigraph& g, const std::vector<EdgeId>& edges) {
    std::vector<std::pair<std::size_t, std::size_t>> list;
    list.reserve(edges.size());
    for (EdgeId e : edges) list.emplace_back(g.left_of(e), g.right_of(e));
    return EdgeSubgraph{BipartiteMultigraph(g.left_count(), g.right_count(), list), edges};
}

} // namespace

Factor perfect_matching(const BipartiteMultigraph& g) {
    std::size_t k = regular_degree_or_throw(g);
    if (k == 0) {
        if (g.vertex_count() > 0)
            throw Error(errc::zero_degree, "degree-0 vertices cannot be matched");
        return Factor{1, {}};
    }
    EdgeColoring coloring = color_edges(g, k);
    Factor f{1, {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (coloring.assignments()[e] == 0) f.edges.push_back(e);
    return f;
}

Factorization one_factorization(const BipartiteMultigraph& g) {
    std::size_t k = regular_degree_or_throw(g);
    Factorization result;
    if (k == 0) return result;
    EdgeColoring coloring = color_edges(g, k);
    result.factors.assign(k, Factor{1, {}});
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        result.factors[coloring.assignments()[e]].edges.push_back(e);
    return result;
}

RegularizationEmbedding regularize(const BipartiteMultigraph& g, std::size_t k) {
    if (k < g.max_degree())
        throw Error(errc::k_too_small, "k = " + std::to_string(k) +
                                           " is below the maximum degree " +
                                           std::to_string(g.max_degree()));
    const std::size_t nl = g.left_count(), nr = g.right_count();

    // Host sides: originals first, then the copies of the opposite side's
    // vertices, so that each vertex and its copy face each other and padding
    // edges cross the bipartition. Host edges are inserted as images of the
    // originals (ids preserved), then the mirrored copies, then padding.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(2 * g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        edges.emplace_back(g.left_of(e), g.right_of(e));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        edges.emplace_back(nl + g.right_of(e), nr + g.left_of(e));

    RegularizationEmbedding emb;
    emb.k = k;
    std::size_t padding_from = edges.size();
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t t = g.degree(left_vertex(i)); t < k; ++t)
            edges.emplace_back(i, nr + i);
    for (std::size_t j = 0; j < nr; ++j)
        for (std::size_t t = g.degree(right_vertex(j)); t < k; ++t)
            edges.emplace_back(nl + j, j);

    emb.host = BipartiteMultigraph(nl + nr, nr + nl, edges);
    emb.vertex_map.resize(g.vertex_count());
    for (std::size_t i = 0; i < nl; ++i) emb.vertex_map[i] = left_vertex(i);
    for (std::size_t j = 0; j < nr; ++j) emb.vertex_map[nl + j] = right_vertex(j);
    emb.edge_map.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) emb.edge_map[e] = e;
    for (EdgeId e = padding_from; e < edges.size(); ++e) emb.padding_edges.push_back(e);
    return emb;
}

EdgeColoring color_via_regularization(const BipartiteMultigraph& g, std::size_t k) {
    RegularizationEmbedding emb = regularize(g, k);
    Factorization host_factors = one_factorization(emb.host);

    std::vector<std::size_t> host_color(emb.host.edge_count(), unassigned_color);
    for (std::size_t c = 0; c < host_factors.factors.size(); ++c)
        for (EdgeId e : host_factors.factors[c].edges) host_color[e] = c;

    EdgeColoring out(k, g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out.set_color(e, host_color[emb.edge_map[e]]);
    return out;
}

SplitEmbedding split_degree(const BipartiteMultigraph& g, std::size_t mu) {
    std::size_t k = regular_degree_or_throw(g);
    if (mu == 0 || k % mu != 0)
        throw Error(errc::not_divisible, "regular degree " + std::to_string(k) +
                                             " is not divisible by mu = " + std::to_string(mu));
    const std::size_t nu = k / mu;

    // Each vertex becomes mu copies; copy c of a vertex inherits positions
    // [c*nu, (c+1)*nu) of the original adjacency list. Copy c of left i is
    // split-left i*mu+c (same for the right side), and edge ids carry over.
    std::vector<std::size_t> pos_left(g.edge_count()), pos_right(g.edge_count());
    for (std::size_t flat = 0; flat < g.vertex_count(); ++flat) {
        VertexId v = g.vertex_from_flat(flat);
        auto inc = g.incident(v);
        for (std::size_t p = 0; p < inc.size(); ++p)
            (v.side == Side::Left ? pos_left : pos_right)[inc[p]] = p;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        edges.emplace_back(g.left_of(e) * mu + pos_left[e] / nu,
                           g.right_of(e) * mu + pos_right[e] / nu);

    SplitEmbedding se;
    se.mu = mu;
    se.nu = nu;
    se.split = BipartiteMultigraph(g.left_count() * mu, g.right_count() * mu, edges);
    se.vertex_map.resize(se.split.vertex_count());
    for (std::size_t i = 0; i < g.left_count() * mu; ++i)
        se.vertex_map[i] = left_vertex(i / mu);
    for (std::size_t j = 0; j < g.right_count() * mu; ++j)
        se.vertex_map[g.left_count() * mu + j] = right_vertex(j / mu);
    se.edge_bijection.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) se.edge_bijection[e] = e;
    return se;
}

Factor merge_factor(const SplitEmbedding& se, const Factor& f) {
    std::vector<std::size_t> count(se.split.vertex_count(), 0);
    std::vector<char> used(se.split.edge_count(), 0);
    for (EdgeId e : f.edges) {
        if (e >= se.split.edge_count() || used[e])
            throw Error(errc::invalid_factor, "factor repeats or exceeds the split graph's edges");
        used[e] = 1;
        ++count[se.split.left_of(e)];
        ++count[se.split.left_count() + se.split.right_of(e)];
    }
    for (std::size_t c : count)
        if (c != f.degree)
            throw Error(errc::invalid_factor,
                        "factor is not uniform of degree " + std::to_string(f.degree) +
                            " on the split graph");

    Factor merged{se.mu * f.degree, {}};
    merged.edges.reserve(f.edges.size());
    for (EdgeId e : f.edges) merged.edges.push_back(se.edge_bijection[e]);
    std::sort(merged.edges.begin(), merged.edges.end());
    return merged;
}

Factor factor_of_degree(const BipartiteMultigraph& g, std::size_t d) {
    std::size_t k = regular_degree_or_throw(g);
    if (d > k)
        throw Error(errc::d_too_large, "requested degree " + std::to_string(d) +
                                           " exceeds the regular degree " + std::to_string(k));
    Factorization fact = one_factorization(g);
    Factor out{d, {}};
    for (std::size_t c = 0; c < d; ++c)
        out.edges.insert(out.edges.end(), fact.factors[c].edges.begin(),
                         fact.factors[c].edges.end());
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Factorization split_cycles_factorization(const BipartiteMultigraph& g) {
    std::size_t k = regular_degree_or_throw(g);
    if (k != 2)
        throw Error(errc::not_regular, "cycle splitting expects a 2-regular graph, got degree " +
                                           std::to_string(k));

    // A 2-regular bipartite graph is a disjoint union of even cycles. Walk
    // each cycle from its lowest edge id and alternate the two factors; a
    // double edge is the 2-cycle case.
    Factorization result;
    result.factors.assign(2, Factor{1, {}});
    std::vector<char> visited(g.edge_count(), 0);

    for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
        if (visited[e0]) continue;
        visited[e0] = 1;
        result.factors[0].edges.push_back(e0);

        const std::size_t start = g.left_of(e0); // flat: left index
        std::size_t cur = g.left_count() + g.right_of(e0);
        EdgeId prev = e0;
        std::size_t bit = 1;
        while (cur != start) {
            auto inc = g.incident(g.vertex_from_flat(cur));
            EdgeId next = inc[0] == prev ? inc[1] : inc[0];
            visited[next] = 1;
            result.factors[bit].edges.push_back(next);
            cur = g.flat_index(g.other_endpoint(next, g.vertex_from_flat(cur)));
            prev = next;
            bit ^= 1;
        }
        if (bit != 0)
            throw Error(errc::internal_invariant_violation, "odd cycle in a bipartite graph");
    }

    std::sort(result.factors[0].edges.begin(), result.factors[0].edges.end());
    std::sort(result.factors[1].edges.begin(), result.factors[1].edges.end());
    return result;
}

namespace {

Factorization power_of_two_recursive(const BipartiteMultigraph& g, std::size_t k) {
    if (k == 1) {
        Factor all{1, {}};
        all.edges.resize(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) all.edges[e] = e;
        return Factorization{{all}};
    }
    if (k == 2) return split_cycles_factorization(g);

    // Halve: split to 2-regular, factor the cycles, merge each matching back
    // to a degree-k/2 factor, then recurse inside both halves.
    SplitEmbedding se = split_degree(g, k / 2);
    Factorization two = split_cycles_factorization(se.split);

    Factorization result;
    for (const Factor& matching : two.factors) {
        Factor half = merge_factor(se, matching);
        EdgeSubgraph sub = edge_subgraph(g, half.edges);
        Factorization inner = power_of_two_recursive(sub.graph, k / 2);
        for (Factor& f : inner.factors) {
            for (EdgeId& e : f.edges) e = sub.to_host[e];
            std::sort(f.edges.begin(), f.edges.end());
            result.factors.push_back(std::move(f));
        }
    }
    return result;
}

} // namespace

Factorization power_of_two_factorization(const BipartiteMultigraph& g) {
    std::size_t k = regular_degree_or_throw(g);
    if (k == 0 || (k & (k - 1)) != 0)
        throw Error(errc::not_power_of_two,
                    "regular degree " + std::to_string(k) + " is not a power of two");
    return power_of_two_recursive(g, k);
}

bool is_factor(const BipartiteMultigraph& g, const Factor& f) {
    std::vector<std::size_t> count(g.vertex_count(), 0);
    std::vector<char> used(g.edge_count(), 0);
    for (EdgeId e : f.edges) {
        if (e >= g.edge_count() || used[e]) return false;
        used[e] = 1;
        ++count[g.left_of(e)];
        ++count[g.left_count() + g.right_of(e)];
    }
    return std::all_of(count.begin(), count.end(),
                       [&](std::size_t c) { return c == f.degree; });
}

std::optional<std::string> find_factorization_violation(const BipartiteMultigraph& g,
                                                        const Factorization& fact) {
    std::vector<std::size_t> times_used(g.edge_count(), 0);
    for (std::size_t i = 0; i < fact.factors.size(); ++i) {
        const Factor& f = fact.factors[i];
        if (!is_factor(g, f))
            return "factor " + std::to_string(i) + " is not a uniform factor of degree " +
                   std::to_string(f.degree);
        for (EdgeId e : f.edges) ++times_used[e];
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (times_used[e] == 0) return "edge " + std::to_string(e) + " is in no factor";
        if (times_used[e] > 1) return "edge " + std::to_string(e) + " is in several factors";
    }
    return std::nullopt;
}

bool verify_factorization(const BipartiteMultigraph& g, const Factorization& f) {
    return !find_factorization_violation(g, f).has_value();
}

} // namespace bifactor
