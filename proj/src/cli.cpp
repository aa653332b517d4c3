#include "bifactor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "bifactor/edge_coloring.hpp"
#include "bifactor/factorization.hpp"
#include "bifactor/graph.hpp"
#include "bifactor/instances.hpp"
#include "bifactor/io.hpp"
#include "bifactor/matrix.hpp"

namespace bifactor::cli {

namespace {

using nlohmann::ordered_json;

// Every payload is re-verified before it is printed; a failure here would be
// a bug, not a user error, hence the dedicated error code.
[[noreturn]] void self_check_failed(const std::string& what) {
    throw Error(errc::internal_invariant_violation, "self-check failed: " + what);
}

// Bipartite input for the graph subcommands: 'bipartite' files are taken
// verbatim, 'graph' files go through the two-coloring relabeling first (which
// keeps edge ids, so edge-indexed output still refers to the file's edges).
BipartiteMultigraph load_bipartite(const std::string& path) {
    io::AnyGraph any = io::read_graph_file(path);
    if (std::holds_alternative<BipartiteMultigraph>(any))
        return std::get<BipartiteMultigraph>(std::move(any));
    return as_bipartite(std::get<GeneralGraph>(any)).graph;
}

ordered_json walk_json(const OddWalk& walk) {
    ordered_json vertices = ordered_json::array();
    for (std::size_t v : walk.vertices) vertices.push_back(v + 1);
    return ordered_json{{"length", walk.length()},
                        {"vertices", std::move(vertices)},
                        {"edges", walk.edges}};
}

bool walk_is_valid(const GeneralGraph& g, const OddWalk& walk) {
    if (walk.edges.size() % 2 == 0 || walk.vertices.size() != walk.edges.size() + 1 ||
        walk.vertices.front() != walk.vertices.back())
        return false;
    for (std::size_t i = 0; i < walk.edges.size(); ++i) {
        if (walk.edges[i] >= g.edge_count()) return false;
        auto [a, b] = g.endpoints(walk.edges[i]);
        std::size_t u = walk.vertices[i], v = walk.vertices[i + 1];
        if (!((a == u && b == v) || (a == v && b == u))) return false;
    }
    return true;
}

ordered_json permutations_json(const PermutationDecomposition& d) {
    ordered_json parts = ordered_json::array();
    for (const Permutation& p : d.parts) {
        ordered_json images = ordered_json::array();
        for (std::size_t i : p.images) images.push_back(i + 1);
        parts.push_back(std::move(images));
    }
    return parts;
}

ordered_json regular_degree_json(const std::optional<std::size_t>& k) {
    return k ? ordered_json(*k) : ordered_json(nullptr);
}

// --- subcommand handlers ----------------------------------------------------

ordered_json do_check(const std::string& path) {
    io::AnyGraph any = io::read_graph_file(path);
    ordered_json payload;
    if (std::holds_alternative<BipartiteMultigraph>(any)) {
        const auto& g = std::get<BipartiteMultigraph>(any);
        payload["format"] = "bipartite";
        payload["n_left"] = g.left_count();
        payload["n_right"] = g.right_count();
        payload["m"] = g.edge_count();
        payload["bipartite"] = true;
        payload["class_sizes"] = {g.left_count(), g.right_count()};
        payload["max_degree"] = g.max_degree();
        payload["regular_degree"] = regular_degree_json(g.regular_degree());
        return payload;
    }

    const auto& g = std::get<GeneralGraph>(any);
    payload["format"] = "graph";
    payload["n"] = g.vertex_count();
    payload["m"] = g.edge_count();
    TwoColoringResult r = two_coloring(g);
    if (std::holds_alternative<TwoClasses>(r)) {
        const auto& classes = std::get<TwoClasses>(r);
        payload["bipartite"] = true;
        std::size_t left = std::count(classes.begin(), classes.end(), Side::Left);
        payload["class_sizes"] = {left, classes.size() - left};
    } else {
        const auto& walk = std::get<OddWalk>(r);
        if (!walk_is_valid(g, walk)) self_check_failed("odd walk is not a closed odd walk");
        payload["bipartite"] = false;
        payload["odd_walk"] = walk_json(walk);
    }
    payload["max_degree"] = g.max_degree();
    payload["regular_degree"] = regular_degree_json(g.regular_degree());
    return payload;
}

ordered_json do_color(const std::string& path, std::size_t k) {
    BipartiteMultigraph g = load_bipartite(path);
    EdgeColoring coloring = color_edges(g, k);
    if (auto v = find_coloring_violation(g, coloring)) self_check_failed(v->describe());

    ordered_json assignments = ordered_json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        assignments.push_back({e, coloring.assignments()[e]});
    return ordered_json{{"k", k}, {"assignments", std::move(assignments)}};
}

Factorization factorize_with(const BipartiteMultigraph& g, const std::string& engine) {
    return engine == "pow2" ? power_of_two_factorization(g) : one_factorization(g);
}

ordered_json do_factorize(const std::string& path, const std::string& engine) {
    BipartiteMultigraph g = load_bipartite(path);
    Factorization fact = factorize_with(g, engine);
    if (auto v = find_factorization_violation(g, fact)) self_check_failed(*v);
    for (const Factor& f : fact.factors)
        if (f.degree != 1) self_check_failed("a factor is not a perfect matching");

    ordered_json factors = ordered_json::array();
    for (const Factor& f : fact.factors) factors.push_back(f.edges);
    return ordered_json{{"k", fact.factors.size()}, {"factors", std::move(factors)}};
}

ordered_json do_matching(const std::string& path, const std::string& engine) {
    BipartiteMultigraph g = load_bipartite(path);
    Factor matching =
        engine == "pow2" ? power_of_two_factorization(g).factors.at(0) : perfect_matching(g);
    if (!is_factor(g, matching) || matching.degree != 1)
        self_check_failed("result is not a perfect matching");

    ordered_json pairs = ordered_json::array();
    std::vector<std::size_t> partner(g.left_count());
    for (EdgeId e : matching.edges) partner[g.left_of(e)] = g.right_of(e);
    for (std::size_t i = 0; i < g.left_count(); ++i) pairs.push_back({i + 1, partner[i] + 1});
    return ordered_json{{"edges", matching.edges}, {"pairs", std::move(pairs)}};
}

ordered_json do_factor(const std::string& path, std::size_t d, const std::string& engine) {
    BipartiteMultigraph g = load_bipartite(path);
    Factor factor{d, {}};
    if (engine == "pow2") {
        Factorization fact = power_of_two_factorization(g);
        if (d > fact.factors.size())
            throw Error(errc::d_too_large, "requested degree " + std::to_string(d) +
                                               " exceeds the regular degree " +
                                               std::to_string(fact.factors.size()));
        for (std::size_t c = 0; c < d; ++c)
            factor.edges.insert(factor.edges.end(), fact.factors[c].edges.begin(),
                                fact.factors[c].edges.end());
        std::sort(factor.edges.begin(), factor.edges.end());
    } else {
        factor = factor_of_degree(g, d);
    }
    if (!is_factor(g, factor)) self_check_failed("result is not a uniform factor");
    return ordered_json{{"d", d}, {"edges", factor.edges}};
}

ordered_json do_decompose(const std::string& path) {
    ExactMatrix m = io::read_matrix_file(path);
    PermutationDecomposition d = decompose_into_permutations(m);
    if (permutation_sum(d, m.size()) != m)
        self_check_failed("permutation matrices do not sum back to the input");
    return ordered_json{{"s", d.parts.size()}, {"permutations", permutations_json(d)}};
}

ordered_json do_member(const std::string& path) {
    ExactMatrix m = io::read_matrix_file(path);
    Permutation p = nonzero_member(m);
    ordered_json images = ordered_json::array(), entries = ordered_json::array();
    for (std::size_t i = 0; i < p.images.size(); ++i) {
        if (sgn(m.at(i, p.images[i])) <= 0) self_check_failed("selected entry is not positive");
        images.push_back(p.images[i] + 1);
        entries.push_back(m.at(i, p.images[i]).get_str());
    }
    return ordered_json{{"permutation", std::move(images)}, {"entries", std::move(entries)}};
}

ordered_json do_support_decompose(const std::string& path) {
    ExactMatrix m = io::read_matrix_file(path);
    PermutationDecomposition d = support_decomposition(m);
    if (!covers_support_exactly_once(d, m))
        self_check_failed("parts do not cover the support exactly once");
    return ordered_json{{"k", d.parts.size()}, {"permutations", permutations_json(d)}};
}

ordered_json do_count_members(const std::string& path) {
    ExactMatrix m = io::read_matrix_file(path);
    return ordered_json{{"count", count_nonzero_members_bruteforce(m)}};
}

} // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact edge coloring, factorization and permutation decomposition "
                 "for bipartite multigraphs"};
    app.name("bifactor");
    app.require_subcommand(1);

    std::string graph_path, matrix_path, output_path;
    std::string engine = "coloring";
    std::string kind;
    std::size_t k = 0, d = 0, mu = 0;
    std::size_t gen_n = 0, gen_k = 0, gen_nl = 0, gen_nr = 0, gen_md = 0, gen_m = 0, gen_s = 0;
    std::uint64_t seed = 0;

    CLI::App* check = app.add_subcommand("check", "report bipartiteness and regularity");
    check->add_option("graphfile", graph_path, "graph file")->required();

    CLI::App* color = app.add_subcommand("color", "properly color the edges with k colors");
    color->add_option("graphfile", graph_path, "graph file")->required();
    color->add_option("--k", k, "number of colors, at least the maximum degree")->required();

    CLI::App* factorize =
        app.add_subcommand("factorize", "split a regular graph into perfect matchings");
    factorize->add_option("graphfile", graph_path, "graph file")->required();
    factorize->add_option("--engine", engine, "factorization engine")
        ->check(CLI::IsMember({"coloring", "pow2"}));

    CLI::App* matching = app.add_subcommand("matching", "find one perfect matching");
    matching->add_option("graphfile", graph_path, "graph file")->required();
    matching->add_option("--engine", engine, "factorization engine")
        ->check(CLI::IsMember({"coloring", "pow2"}));

    CLI::App* factor = app.add_subcommand("factor", "extract a factor of uniform degree d");
    factor->add_option("graphfile", graph_path, "graph file")->required();
    factor->add_option("--d", d, "degree of the factor")->required();
    factor->add_option("--engine", engine, "factorization engine")
        ->check(CLI::IsMember({"coloring", "pow2"}));

    CLI::App* split = app.add_subcommand("split", "split a regular graph's degree by mu");
    split->add_option("graphfile", graph_path, "graph file")->required();
    split->add_option("--mu", mu, "divide the regular degree by this factor")->required();

    CLI::App* decompose =
        app.add_subcommand("decompose", "write an equal-line-sum integer matrix as a sum of "
                                        "permutation matrices");
    decompose->add_option("matrixfile", matrix_path, "matrix file")->required();

    CLI::App* member = app.add_subcommand(
        "member", "permutation with all selected entries positive (equal line sums)");
    member->add_option("matrixfile", matrix_path, "matrix file")->required();

    CLI::App* support = app.add_subcommand(
        "support-decompose", "cover a line-regular support with permutations, each cell once");
    support->add_option("matrixfile", matrix_path, "matrix file")->required();

    CLI::App* count = app.add_subcommand("count-members", "exhaustively count nonzero members");
    count->add_option("matrixfile", matrix_path, "matrix file")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a random instance (text format)");
    gen->add_option("--kind", kind, "regular | bounded | matrix")
        ->required()
        ->check(CLI::IsMember({"regular", "bounded", "matrix"}));
    gen->add_option("--n", gen_n, "vertices per side (regular) or matrix size");
    gen->add_option("--k", gen_k, "regular degree");
    gen->add_option("--n-left", gen_nl, "left vertices (bounded)");
    gen->add_option("--n-right", gen_nr, "right vertices (bounded)");
    gen->add_option("--max-deg", gen_md, "degree cap (bounded)");
    gen->add_option("--m", gen_m, "edge count (bounded)");
    gen->add_option("--s", gen_s, "line sum (matrix)");
    gen->add_option("--seed", seed, "random seed (default 0)");

    for (CLI::App* sub : {check, color, factorize, matching, factor, split, decompose, member,
                          support, count, gen})
        sub->add_option("--output", output_path, "write the payload to this file");

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (app.got_subcommand(check)) {
            result.output = do_check(graph_path).dump(2) + "\n";
        } else if (app.got_subcommand(color)) {
            result.output = do_color(graph_path, k).dump(2) + "\n";
        } else if (app.got_subcommand(factorize)) {
            result.output = do_factorize(graph_path, engine).dump(2) + "\n";
        } else if (app.got_subcommand(matching)) {
            result.output = do_matching(graph_path, engine).dump(2) + "\n";
        } else if (app.got_subcommand(factor)) {
            result.output = do_factor(graph_path, d, engine).dump(2) + "\n";
        } else if (app.got_subcommand(split)) {
            SplitEmbedding se = split_degree(load_bipartite(graph_path), mu);
            if (se.split.regular_degree() != se.nu)
                self_check_failed("split graph is not uniformly of the reduced degree");
            std::ostringstream text;
            io::write_graph(text, se.split);
            result.output = text.str();
        } else if (app.got_subcommand(decompose)) {
            result.output = do_decompose(matrix_path).dump(2) + "\n";
        } else if (app.got_subcommand(member)) {
            result.output = do_member(matrix_path).dump(2) + "\n";
        } else if (app.got_subcommand(support)) {
            result.output = do_support_decompose(matrix_path).dump(2) + "\n";
        } else if (app.got_subcommand(count)) {
            result.output = do_count_members(matrix_path).dump(2) + "\n";
        } else if (app.got_subcommand(gen)) {
            std::ostringstream text;
            if (kind == "regular") {
                if (!gen->count("--n") || !gen->count("--k"))
                    throw ParseError("gen --kind regular needs --n and --k");
                io::write_graph(text, random_regular_bipartite(gen_n, gen_k, Seed{seed}));
            } else if (kind == "bounded") {
                if (!gen->count("--n-left") || !gen->count("--n-right") ||
                    !gen->count("--max-deg") || !gen->count("--m"))
                    throw ParseError(
                        "gen --kind bounded needs --n-left, --n-right, --max-deg and --m");
                io::write_graph(text, random_bounded_degree_bipartite(gen_nl, gen_nr, gen_md,
                                                                      gen_m, Seed{seed}));
            } else {
                if (!gen->count("--n") || !gen->count("--s"))
                    throw ParseError("gen --kind matrix needs --n and --s");
                io::write_matrix(text, random_equal_line_sum_matrix(gen_n, gen_s, Seed{seed}));
            }
            result.output = text.str();
        }

        if (!output_path.empty()) {
            std::ofstream out(output_path);
            if (!out || !(out << result.output))
                throw ParseError("cannot write '" + output_path + "'");
            result.output.clear();
            result.diagnostics = "wrote " + output_path + "\n";
        }
        return result;
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.output = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.output = ordered_json{{"error", "ParseError"}}.dump(2) + "\n";
        result.diagnostics = std::string(e.what()) + "\n";
        return result;
    } catch (const NotBipartiteError& e) {
        result.exit_code = 1;
        result.output =
            ordered_json{{"error", error_name(e.code())}, {"odd_walk", walk_json(e.witness())}}
                .dump(2) +
            "\n";
        result.diagnostics = std::string(e.what()) + "\n";
        return result;
    } catch (const ParseError& e) {
        result.exit_code = 2;
        result.output = ordered_json{{"error", "ParseError"}}.dump(2) + "\n";
        result.diagnostics = std::string(e.what()) + "\n";
        return result;
    } catch (const Error& e) {
        result.exit_code = 1;
        result.output = ordered_json{{"error", error_name(e.code())}}.dump(2) + "\n";
        result.diagnostics = std::string(e.what()) + "\n";
        return result;
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.output = ordered_json{{"error", "Internal"}}.dump(2) + "\n";
        result.diagnostics = std::string(e.what()) + "\n";
        return result;
    }
}

} // namespace bifactor::cli
