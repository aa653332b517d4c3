#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "bifactor/factorization.hpp"
#include "bifactor/graph.hpp"
#include "bifactor/instances.hpp"

using namespace bifactor;

namespace {

BipartiteMultigraph bip(const char* name) { return std::get<BipartiteMultigraph>(fixture(name)); }

} // namespace

TEST_CASE("perfect_matching returns a real matching chosen deterministically") {
    SUBCASE("parallel edges: the lowest id wins") {
        BipartiteMultigraph g(1, 1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
        Factor f = perfect_matching(g);
        CHECK(f.degree == 1);
        CHECK(f.edges == std::vector<EdgeId>{0});
    }
    SUBCASE("k33 matching is one of the six and always the same one") {
        BipartiteMultigraph g = bip("k33");
        Factor f = perfect_matching(g);
        CHECK(is_factor(g, f));
        auto all = oracles::all_perfect_matchings(g);
        CHECK(all.size() == 6);
        CHECK(std::find(all.begin(), all.end(), f.edges) != all.end());
        CHECK(perfect_matching(g).edges == f.edges);
    }
    SUBCASE("cube") {
        BipartiteMultigraph g = bip("cube");
        Factor f = perfect_matching(g);
        CHECK(f.edges.size() == 4);
        CHECK(is_factor(g, f));
    }
    SUBCASE("errors") {
        CHECK(error_code_of([] { perfect_matching(bip("path2")); }) == errc::not_regular);
        CHECK(error_code_of([] { perfect_matching(BipartiteMultigraph(2, 2, {})); }) ==
              errc::zero_degree);
    }
    SUBCASE("the empty graph has the empty matching") {
        Factor f = perfect_matching(BipartiteMultigraph(0, 0, {}));
        CHECK(f.degree == 1);
        CHECK(f.edges.empty());
    }
}

TEST_CASE("one_factorization splits a regular graph into perfect matchings") {
    SUBCASE("four parallel edges make four singleton factors") {
        BipartiteMultigraph g(1, 1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
        Factorization f = one_factorization(g);
        REQUIRE(f.factors.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(f.factors[i].edges == std::vector<EdgeId>{i});
        CHECK(verify_factorization(g, f));
    }
    SUBCASE("cube gives three matchings of four edges") {
        BipartiteMultigraph g = bip("cube");
        Factorization f = one_factorization(g);
        REQUIRE(f.factors.size() == 3);
        for (const Factor& m : f.factors) {
            CHECK(m.degree == 1);
            CHECK(m.edges.size() == 4);
            CHECK(is_factor(g, m));
        }
        CHECK(verify_factorization(g, f));
    }
    SUBCASE("0-regular graphs have the empty factorization") {
        CHECK(one_factorization(BipartiteMultigraph(3, 2, {})).factors.empty());
    }
    SUBCASE("random regular graphs") {
        std::mt19937_64 pick(29);
        for (int it = 0; it < 80; ++it) {
            const std::size_t n = 1 + pick() % 10;
            const std::size_t k = 1 + pick() % 6;
            BipartiteMultigraph g = random_regular_bipartite(n, k, Seed{pick()});
            CAPTURE(it);
            Factorization f = one_factorization(g);
            CHECK(f.factors.size() == k);
            CHECK(verify_factorization(g, f));
            for (const Factor& m : f.factors) CHECK(m.degree == 1);
        }
    }
}

TEST_CASE("regularize embeds into a k-regular host with mirrored copies") {
    SUBCASE("path2 at k = 2 becomes a six-cycle") {
        BipartiteMultigraph g = bip("path2");
        RegularizationEmbedding emb = regularize(g, 2);
        CHECK(emb.k == 2);
        CHECK(emb.host.left_count() == 3);
        CHECK(emb.host.right_count() == 3);
        CHECK(emb.host.edge_count() == 6);
        CHECK(emb.host.regular_degree() == 2);
        CHECK(emb.padding_edges == std::vector<EdgeId>{4, 5});
        CHECK(components(emb.host).size() == 1); // one six-cycle
        // original edges keep their ids and endpoints
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(emb.edge_map[e] == e);
            CHECK(emb.host.left_of(e) == g.left_of(e));
            CHECK(emb.host.right_of(e) == g.right_of(e));
        }
    }
    SUBCASE("a single edge at k = 3 pads both endpoints") {
        BipartiteMultigraph g(1, 1, {{0, 0}});
        RegularizationEmbedding emb = regularize(g, 3);
        CHECK(emb.host.vertex_count() == 4);
        CHECK(emb.host.edge_count() == 6);
        CHECK(emb.host.regular_degree() == 3);
        CHECK(emb.padding_edges.size() == 4);
        // padding edges join originals to their own copies
        for (EdgeId e : emb.padding_edges) {
            VertexId orig;
            if (emb.host.left_of(e) < g.left_count())
                orig = left_vertex(emb.host.left_of(e));
            else
                orig = right_vertex(emb.host.right_of(e));
            if (orig.side == Side::Left) {
                CHECK(emb.host.right_of(e) == g.right_count() + orig.index);
            } else {
                CHECK(emb.host.left_of(e) == g.left_count() + orig.index);
            }
        }
    }
    SUBCASE("an already regular graph gains only the mirror copy") {
        BipartiteMultigraph g = bip("cube");
        RegularizationEmbedding emb = regularize(g, 3);
        CHECK(emb.padding_edges.empty());
        CHECK(emb.host.edge_count() == 24);
        CHECK(emb.host.regular_degree() == 3);
    }
    SUBCASE("k below the maximum degree is rejected") {
        CHECK(error_code_of([] { regularize(bip("path2"), 1); }) == errc::k_too_small);
    }
    SUBCASE("hosts are k-regular and keep images intact on random instances") {
        std::mt19937_64 pick(31);
        for (int it = 0; it < 60; ++it) {
            const std::size_t nl = 1 + pick() % 7;
            const std::size_t nr = 1 + pick() % 7;
            const std::size_t cap = 1 + pick() % 4;
            const std::size_t m = pick() % (cap * std::min(nl, nr) + 1);
            BipartiteMultigraph g = random_bounded_degree_bipartite(nl, nr, cap, m, Seed{pick()});
            CAPTURE(it);
            const std::size_t k = g.max_degree() + pick() % 3;
            if (k == 0) continue;
            RegularizationEmbedding emb = regularize(g, k);
            CHECK(emb.host.regular_degree() == k);
            CHECK(emb.host.left_count() == nl + nr);
            CHECK(emb.host.right_count() == nl + nr);
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                CHECK(emb.host.left_of(emb.edge_map[e]) == g.left_of(e));
                CHECK(emb.host.right_of(emb.edge_map[e]) == g.right_of(e));
            }
            std::size_t degree_gap = 0;
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                degree_gap += k - g.degree(g.vertex_from_flat(v));
            CHECK(emb.padding_edges.size() == degree_gap);
        }
    }
}

TEST_CASE("color_via_regularization is a proper coloring engine") {
    SUBCASE("small cases") {
        BipartiteMultigraph one(1, 1, {{0, 0}});
        EdgeColoring c1 = color_via_regularization(one, 1);
        CHECK(c1.color_of(0) == 0);

        BipartiteMultigraph g = bip("path2");
        EdgeColoring c2 = color_via_regularization(g, 2);
        CHECK(verify_coloring(g, c2));
    }
    SUBCASE("proper on random instances, k at and above the maximum degree") {
        std::mt19937_64 pick(37);
        for (int it = 0; it < 60; ++it) {
            const std::size_t nl = 1 + pick() % 7;
            const std::size_t nr = 1 + pick() % 7;
            const std::size_t cap = 1 + pick() % 4;
            const std::size_t m = 1 + pick() % (cap * std::min(nl, nr));
            BipartiteMultigraph g = random_bounded_degree_bipartite(nl, nr, cap, m, Seed{pick()});
            CAPTURE(it);
            for (std::size_t k : {g.max_degree(), g.max_degree() + 2}) {
                EdgeColoring c = color_via_regularization(g, k);
                CHECK(c.palette_size() == k);
                CHECK(verify_coloring(g, c));
            }
        }
    }
    SUBCASE("k too small") {
        CHECK(error_code_of([] { color_via_regularization(bip("cube"), 2); }) == errc::k_too_small);
    }
}

TEST_CASE("split_degree divides the regular degree") {
    SUBCASE("four parallel edges split in half") {
        BipartiteMultigraph g(1, 1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
        SplitEmbedding se = split_degree(g, 2);
        CHECK(se.mu == 2);
        CHECK(se.nu == 2);
        CHECK(se.split.left_count() == 2);
        CHECK(se.split.right_count() == 2);
        CHECK(se.split.regular_degree() == 2);
        // first two edges hug copy 0, last two copy 1
        CHECK(se.split.left_of(0) == 0);
        CHECK(se.split.left_of(1) == 0);
        CHECK(se.split.left_of(2) == 1);
        CHECK(se.split.left_of(3) == 1);
    }
    SUBCASE("four_cycle to a 1-regular double cover") {
        BipartiteMultigraph g = bip("four_cycle");
        SplitEmbedding se = split_degree(g, 2);
        CHECK(se.split.regular_degree() == 1);
        CHECK(se.split.vertex_count() == 2 * g.vertex_count());
        CHECK(se.split.edge_count() == g.edge_count());
    }
    SUBCASE("mu = 1 is the identity reshape") {
        BipartiteMultigraph g = bip("cube");
        SplitEmbedding se = split_degree(g, 1);
        CHECK(se.split == g);
        CHECK(se.nu == 3);
    }
    SUBCASE("vertex_map tracks copies and edge ids are preserved") {
        std::mt19937_64 pick(41);
        for (int it = 0; it < 40; ++it) {
            const std::size_t n = 1 + pick() % 6;
            BipartiteMultigraph g = random_regular_bipartite(n, 6, Seed{pick()});
            CAPTURE(it);
            for (std::size_t mu : {2, 3, 6}) {
                SplitEmbedding se = split_degree(g, mu);
                CHECK(se.split.regular_degree() == 6 / mu);
                for (EdgeId e = 0; e < g.edge_count(); ++e) {
                    CHECK(se.edge_bijection[e] == e);
                    // the split endpoints are copies of the original endpoints
                    CHECK(se.vertex_map[se.split.left_of(e)] == left_vertex(g.left_of(e)));
                    CHECK(se.vertex_map[se.split.left_count() + se.split.right_of(e)] ==
                          right_vertex(g.right_of(e)));
                }
            }
        }
    }
    SUBCASE("errors") {
        CHECK(error_code_of([] { split_degree(bip("cube"), 2); }) == errc::not_divisible);
        CHECK(error_code_of([] { split_degree(bip("cube"), 0); }) == errc::not_divisible);
        CHECK(error_code_of([] { split_degree(bip("path2"), 1); }) == errc::not_regular);
    }
}

TEST_CASE("merge_factor lifts split factors to the original graph") {
    SUBCASE("matching of the split four_cycle covers the whole square") {
        SplitEmbedding se = split_degree(bip("four_cycle"), 2);
        Factor matching = perfect_matching(se.split);
        Factor merged = merge_factor(se, matching);
        CHECK(merged.degree == 2);
        CHECK(merged.edges == std::vector<EdgeId>{0, 1, 2, 3});
    }
    SUBCASE("splitting four parallel edges and cycle-factoring them") {
        BipartiteMultigraph g(1, 1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
        SplitEmbedding se = split_degree(g, 2);
        Factorization two = split_cycles_factorization(se.split);
        Factor f0 = merge_factor(se, two.factors[0]);
        Factor f1 = merge_factor(se, two.factors[1]);
        CHECK(f0.degree == 2);
        CHECK(f0.edges == std::vector<EdgeId>{0, 2});
        CHECK(f1.edges == std::vector<EdgeId>{1, 3});
        CHECK(is_factor(g, f0));
        CHECK(is_factor(g, f1));
    }
    SUBCASE("merge of a split matching is uniform on random regular graphs") {
        std::mt19937_64 pick(43);
        for (int it = 0; it < 40; ++it) {
            const std::size_t n = 1 + pick() % 6;
            BipartiteMultigraph g = random_regular_bipartite(n, 6, Seed{pick()});
            CAPTURE(it);
            for (std::size_t mu : {2, 3}) {
                SplitEmbedding se = split_degree(g, mu);
                Factor merged = merge_factor(se, perfect_matching(se.split));
                CHECK(merged.degree == mu);
                CHECK(is_factor(g, merged));
            }
        }
    }
    SUBCASE("invalid factors are rejected") {
        SplitEmbedding se = split_degree(bip("four_cycle"), 2);
        CHECK(error_code_of([&] { merge_factor(se, Factor{1, {0}}); }) == errc::invalid_factor);
        CHECK(error_code_of([&] { merge_factor(se, Factor{1, {0, 0, 1, 2}}); }) ==
              errc::invalid_factor);
        CHECK(error_code_of([&] { merge_factor(se, Factor{1, {9}}); }) == errc::invalid_factor);
        CHECK(error_code_of([&] { merge_factor(se, Factor{2, {0, 1, 2, 3}}); }) ==
              errc::invalid_factor);
    }
}

TEST_CASE("factor_of_degree takes the first d color classes") {
    BipartiteMultigraph g = bip("cube");
    SUBCASE("degree zero is empty") {
        Factor f = factor_of_degree(g, 0);
        CHECK(f.degree == 0);
        CHECK(f.edges.empty());
    }
    SUBCASE("full degree is everything") {
        Factor f = factor_of_degree(g, 3);
        CHECK(f.edges.size() == 12);
        CHECK(is_factor(g, f));
    }
    SUBCASE("a 2-factor and its complementary 1-factor") {
        Factor f = factor_of_degree(g, 2);
        CHECK(f.degree == 2);
        CHECK(f.edges.size() == 8);
        CHECK(is_factor(g, f));
        std::vector<EdgeId> complement;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!std::binary_search(f.edges.begin(), f.edges.end(), e)) complement.push_back(e);
        CHECK(is_factor(g, Factor{1, complement}));
    }
    SUBCASE("errors") {
        CHECK(error_code_of([&] { factor_of_degree(g, 4); }) == errc::d_too_large);
        CHECK(error_code_of([] { factor_of_degree(bip("path2"), 1); }) == errc::not_regular);
    }
}

TEST_CASE("split_cycles_factorization walks every cycle") {
    SUBCASE("a double edge is the two-cycle case") {
        BipartiteMultigraph g(1, 1, {{0, 0}, {0, 0}});
        Factorization f = split_cycles_factorization(g);
        CHECK(f.factors[0].edges == std::vector<EdgeId>{0});
        CHECK(f.factors[1].edges == std::vector<EdgeId>{1});
    }
    SUBCASE("four_cycle alternates, lowest edge in factor zero") {
        Factorization f = split_cycles_factorization(bip("four_cycle"));
        CHECK(f.factors[0].edges == std::vector<EdgeId>{0, 2});
        CHECK(f.factors[1].edges == std::vector<EdgeId>{1, 3});
    }
    SUBCASE("two disjoint cycles each seed factor zero with their lowest edge") {
        // a 4-cycle on the first two vertex pairs, then a 6-cycle
        BipartiteMultigraph g(5, 5,
                              {{0, 0}, {0, 1}, {1, 1}, {1, 0},
                               {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {4, 2}});
        Factorization f = split_cycles_factorization(g);
        REQUIRE(verify_factorization(g, f));
        CHECK(f.factors[0].edges.size() == 5);
        CHECK(std::binary_search(f.factors[0].edges.begin(), f.factors[0].edges.end(), EdgeId{0}));
        CHECK(std::binary_search(f.factors[0].edges.begin(), f.factors[0].edges.end(), EdgeId{4}));
    }
    SUBCASE("both factors are perfect matchings on random 2-regular graphs") {
        std::mt19937_64 pick(47);
        for (int it = 0; it < 60; ++it) {
            const std::size_t n = 1 + pick() % 12;
            BipartiteMultigraph g = random_regular_bipartite(n, 2, Seed{pick()});
            CAPTURE(it);
            Factorization f = split_cycles_factorization(g);
            REQUIRE(f.factors.size() == 2);
            CHECK(is_factor(g, f.factors[0]));
            CHECK(is_factor(g, f.factors[1]));
            CHECK(verify_factorization(g, f));
        }
    }
    SUBCASE("rejects anything that is not 2-regular") {
        CHECK(error_code_of([] { split_cycles_factorization(bip("cube")); }) == errc::not_regular);
        CHECK(error_code_of([] { split_cycles_factorization(bip("path2")); }) == errc::not_regular);
    }
}

TEST_CASE("power_of_two_factorization halves its way down") {
    SUBCASE("1-regular graphs are their own factorization") {
        BipartiteMultigraph g(3, 3, {{0, 0}, {1, 1}, {2, 2}});
        Factorization f = power_of_two_factorization(g);
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].edges == std::vector<EdgeId>{0, 1, 2});
    }
    SUBCASE("degree two matches the cycle split") {
        BipartiteMultigraph g = bip("four_cycle");
        CHECK(power_of_two_factorization(g) == split_cycles_factorization(g));
    }
    SUBCASE("degree four and eight on random instances") {
        std::mt19937_64 pick(53);
        for (int it = 0; it < 30; ++it) {
            CAPTURE(it);
            for (std::size_t k : {4, 8}) {
                const std::size_t n = 1 + pick() % 8;
                BipartiteMultigraph g = random_regular_bipartite(n, k, Seed{pick()});
                Factorization f = power_of_two_factorization(g);
                CHECK(f.factors.size() == k);
                CHECK(verify_factorization(g, f));
                for (const Factor& m : f.factors) {
                    CHECK(m.degree == 1);
                    CHECK(is_factor(g, m));
                }
            }
        }
    }
    SUBCASE("rejects other degrees") {
        CHECK(error_code_of([] { power_of_two_factorization(bip("cube")); }) ==
              errc::not_power_of_two);
        CHECK(error_code_of([] { power_of_two_factorization(BipartiteMultigraph(2, 2, {})); }) ==
              errc::not_power_of_two);
        CHECK(error_code_of([] { power_of_two_factorization(bip("path2")); }) == errc::not_regular);
    }
}

TEST_CASE("factorization verifier catches broken certificates") {
    BipartiteMultigraph g = bip("four_cycle");
    Factorization good = split_cycles_factorization(g);
    CHECK_FALSE(find_factorization_violation(g, good).has_value());

    SUBCASE("missing edge") {
        Factorization bad = good;
        bad.factors[1].edges.pop_back();
        auto v = find_factorization_violation(g, bad);
        REQUIRE(v.has_value());
        CHECK_FALSE(verify_factorization(g, bad));
    }
    SUBCASE("repeated edge across factors") {
        Factorization bad = good;
        bad.factors[1].edges = bad.factors[0].edges;
        CHECK(find_factorization_violation(g, bad).has_value());
    }
    SUBCASE("wrong declared degree") {
        Factorization bad = good;
        bad.factors[0].degree = 2;
        CHECK(find_factorization_violation(g, bad).has_value());
    }
    SUBCASE("edge out of range") {
        Factorization bad = good;
        bad.factors[0].edges.push_back(99);
        CHECK(find_factorization_violation(g, bad).has_value());
    }
    SUBCASE("is_factor agrees") {
        CHECK(is_factor(g, good.factors[0]));
        CHECK_FALSE(is_factor(g, Factor{1, {0, 1}}));        // shares a vertex
        CHECK_FALSE(is_factor(g, Factor{1, {0, 0}}));        // repeats
        CHECK_FALSE(is_factor(g, Factor{2, {0, 2}}));        // wrong degree
        CHECK_FALSE(is_factor(g, Factor{1, {0, 99}}));       // out of range
    }
}

TEST_CASE("splitting then merging composes to full one-factorizations") {
    std::mt19937_64 pick(59);
    for (int it = 0; it < 25; ++it) {
        const std::size_t n = 2 + pick() % 5;
        BipartiteMultigraph g = random_regular_bipartite(n, 6, Seed{pick()});
        CAPTURE(it);
        // split 6 = 3 * 2, cycle-split the 2-regular graph, merge both halves
        SplitEmbedding se = split_degree(g, 3);
        Factorization two = split_cycles_factorization(se.split);
        Factor a = merge_factor(se, two.factors[0]);
        Factor b = merge_factor(se, two.factors[1]);
        CHECK(a.degree == 3);
        CHECK(b.degree == 3);
        CHECK(is_factor(g, a));
        CHECK(is_factor(g, b));
        std::vector<EdgeId> all = a.edges;
        all.insert(all.end(), b.edges.begin(), b.edges.end());
        std::sort(all.begin(), all.end());
        std::vector<EdgeId> expect(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) expect[e] = e;
        CHECK(all == expect);
    }
}
