#include "bifactor/instances.hpp"

#include <cassert>
#include <numeric>
#include <random>
#include <string>

namespace bifactor {

namespace {

// Unbiased draw from {0..n-1}. mt19937_64's output sequence is fixed by the
// standard; std::uniform_int_distribution is not, so rejection sampling here
// keeps instances identical across standard libraries.
std::size_t draw_below(std::mt19937_64& rng, std::size_t n) {
    assert(n > 0);
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % span);
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[draw_below(rng, i)]);
    return p;
}

BipartiteMultigraph make_cube() {
    // Corners of the 3-cube split by coordinate parity. Left side: 000, 011,
    // 101, 110 (even weight, numeric order); right side: 001, 010, 100, 111.
    // An edge joins corners differing in exactly one coordinate.
    return BipartiteMultigraph(4, 4,
                               {{0, 0}, {0, 1}, {0, 2},   // 000 - 001, 010, 100
                                {1, 0}, {1, 1}, {1, 3},   // 011 - 001, 010, 111
                                {2, 0}, {2, 2}, {2, 3},   // 101 - 001, 100, 111
                                {3, 1}, {3, 2}, {3, 3}}); // 110 - 010, 100, 111
}

GeneralGraph make_petersen() {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    return GeneralGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

} // namespace

Fixture fixture(std::string_view name) {
    if (name == "cube") return make_cube();
    if (name == "petersen") return make_petersen();
    if (name == "k33") {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) edges.emplace_back(i, j);
        return BipartiteMultigraph(3, 3, edges);
    }
    if (name == "koenig_counterexample_matrix") {
        return ExactMatrix::from_rows({{0, 0, 1}, {0, 0, 1}, {1, 1, -1}});
    }
    if (name == "path2") return BipartiteMultigraph(2, 1, {{0, 0}, {1, 0}});
    if (name == "four_cycle") return BipartiteMultigraph(2, 2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    throw Error(errc::unknown_fixture, "unknown fixture '" + std::string(name) + "'");
}

BipartiteMultigraph random_regular_bipartite(std::size_t n, std::size_t k, Seed seed) {
    std::mt19937_64 rng(seed.value);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(n * k);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<std::size_t> p = random_permutation(rng, n);
        for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, p[i]);
    }
    BipartiteMultigraph g(n, n, edges);
    if (n > 0 && g.regular_degree() != k)
        throw Error(errc::internal_invariant_violation, "generated graph is not regular");
    return g;
}

BipartiteMultigraph random_bounded_degree_bipartite(std::size_t n_left, std::size_t n_right,
                                                    std::size_t max_degree,
                                                    std::size_t edge_count, Seed seed) {
    if (edge_count > n_left * max_degree || edge_count > n_right * max_degree)
        throw Error(errc::infeasible,
                    std::to_string(edge_count) + " edges cannot fit on " +
                        std::to_string(n_left) + "+" + std::to_string(n_right) +
                        " vertices with degree cap " + std::to_string(max_degree));

    std::mt19937_64 rng(seed.value);
    std::vector<std::size_t> degree(n_left + n_right, 0);
    // Saturated vertices are rejected by removing them from the draw pools
    // (swap-pop), so every draw succeeds and generation is O(edge_count).
    std::vector<std::size_t> pool_left(n_left), pool_right(n_right);
    std::iota(pool_left.begin(), pool_left.end(), 0);
    std::iota(pool_right.begin(), pool_right.end(), 0);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(edge_count);
    while (edges.size() < edge_count) {
        std::size_t ul = draw_below(rng, pool_left.size());
        std::size_t ur = draw_below(rng, pool_right.size());
        std::size_t l = pool_left[ul], r = pool_right[ur];
        edges.emplace_back(l, r);
        if (++degree[l] == max_degree) {
            pool_left[ul] = pool_left.back();
            pool_left.pop_back();
        }
        if (++degree[n_left + r] == max_degree) {
            pool_right[ur] = pool_right.back();
            pool_right.pop_back();
        }
    }

    BipartiteMultigraph g(n_left, n_right, edges);
    if (g.max_degree() > max_degree)
        throw Error(errc::internal_invariant_violation, "generated graph exceeds the degree cap");
    return g;
}

ExactMatrix random_equal_line_sum_matrix(std::size_t n, std::size_t s, Seed seed) {
    std::mt19937_64 rng(seed.value);
    ExactMatrix m(n);
    for (std::size_t t = 0; t < s; ++t) {
        std::vector<std::size_t> p = random_permutation(rng, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, p[i]) += 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (m.row_sum(i) != Rational(static_cast<unsigned long>(s)) ||
            m.column_sum(i) != Rational(static_cast<unsigned long>(s)))
            throw Error(errc::internal_invariant_violation, "generated matrix sums are off");
    return m;
}

} // namespace bifactor
