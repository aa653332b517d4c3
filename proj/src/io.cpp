#include "bifactor/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bifactor::io {

namespace {

struct Line {
    std::size_t number; // 1-based, for messages
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

// Significant lines only: comments (first non-blank char '#') and blank
// lines are dropped; everything else is split on whitespace.
std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        Line line{number, {}};
        std::istringstream split(raw);
        std::string token;
        while (split >> token) line.tokens.push_back(std::move(token));
        lines.push_back(std::move(line));
    }
    return lines;
}

std::size_t parse_count(const Line& line, const std::string& token, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        fail(line.number, std::string("expected a nonnegative integer for ") + what + ", got '" +
                              token + "'");
    try {
        return std::stoull(token);
    } catch (const std::out_of_range&) {
        fail(line.number, std::string(what) + " '" + token + "' is out of range");
    }
}

// 1-based vertex label, bounds-checked against n.
std::size_t parse_label(const Line& line, const std::string& token, std::size_t n,
                        const char* what) {
    std::size_t value = parse_count(line, token, what);
    if (value == 0 || value > n)
        fail(line.number, std::string(what) + " " + token + " is outside 1.." + std::to_string(n));
    return value - 1;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_edges(const std::vector<Line>& lines,
                                                             std::size_t from, std::size_t m,
                                                             std::size_t n_first,
                                                             std::size_t n_second,
                                                             std::size_t last_line) {
    if (lines.size() - from < m)
        fail(last_line, "expected " + std::to_string(m) + " edge lines, found " +
                            std::to_string(lines.size() - from));
    if (lines.size() - from > m)
        fail(lines[from + m].number, "expected " + std::to_string(m) + " edge lines, found " +
                                         std::to_string(lines.size() - from));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Line& line = lines[from + i];
        if (line.tokens.size() != 3 || line.tokens[0] != "e")
            fail(line.number, "expected an edge line 'e <a> <b>'");
        edges.emplace_back(parse_label(line, line.tokens[1], n_first, "vertex"),
                           parse_label(line, line.tokens[2], n_second, "vertex"));
    }
    return edges;
}

} // namespace

AnyGraph read_graph(std::istream& in) {
    std::vector<Line> lines = significant_lines(in);
    if (lines.empty()) fail(1, "empty input, expected a 'bipartite' or 'graph' header");
    const Line& head = lines.front();
    std::size_t last_line = lines.back().number;

    if (head.tokens[0] == "bipartite") {
        if (head.tokens.size() != 4)
            fail(head.number, "expected 'bipartite <n_left> <n_right> <m>'");
        std::size_t nl = parse_count(head, head.tokens[1], "n_left");
        std::size_t nr = parse_count(head, head.tokens[2], "n_right");
        std::size_t m = parse_count(head, head.tokens[3], "m");
        return BipartiteMultigraph(nl, nr, parse_edges(lines, 1, m, nl, nr, last_line));
    }
    if (head.tokens[0] == "graph") {
        if (head.tokens.size() != 3) fail(head.number, "expected 'graph <n> <m>'");
        std::size_t n = parse_count(head, head.tokens[1], "n");
        std::size_t m = parse_count(head, head.tokens[2], "m");
        auto edges = parse_edges(lines, 1, m, n, n, last_line);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].first == edges[i].second)
                fail(lines[1 + i].number, "self-loops are not allowed");
        return GeneralGraph(n, edges);
    }
    fail(head.number, "unknown header '" + head.tokens[0] + "', expected 'bipartite' or 'graph'");
}

namespace {

Rational parse_entry(const Line& line, const std::string& token) {
    // integer or p/q, optional leading '-'; anything else is malformed
    std::size_t at = token.empty() || token[0] != '-' ? 0 : 1;
    std::size_t digits = 0;
    while (at < token.size() && std::isdigit(static_cast<unsigned char>(token[at]))) {
        ++at;
        ++digits;
    }
    if (digits == 0) fail(line.number, "malformed entry '" + token + "'");
    mpz_class den(1);
    if (at != token.size()) {
        if (token[at] != '/' || at + 1 == token.size() ||
            token.find_first_not_of("0123456789", at + 1) != std::string::npos)
            fail(line.number, "malformed entry '" + token + "'");
        den = mpz_class(token.substr(at + 1));
        if (den == 0) fail(line.number, "entry '" + token + "' divides by zero");
    }
    Rational value(mpz_class(token.substr(0, at)), den);
    value.canonicalize();
    return value;
}

} // namespace

ExactMatrix read_matrix(std::istream& in) {
    std::vector<Line> lines = significant_lines(in);
    if (lines.empty()) fail(1, "empty input, expected a 'matrix' header");
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "matrix")
        fail(head.number, "expected 'matrix <n>'");
    std::size_t n = parse_count(head, head.tokens[1], "n");

    if (lines.size() - 1 < n)
        fail(lines.back().number, "expected " + std::to_string(n) + " rows, found " +
                                      std::to_string(lines.size() - 1));
    if (lines.size() - 1 > n)
        fail(lines[1 + n].number, "expected " + std::to_string(n) + " rows, found " +
                                      std::to_string(lines.size() - 1));

    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Line& row = lines[1 + i];
        if (row.tokens.size() != n)
            fail(row.number, "row has " + std::to_string(row.tokens.size()) +
                                 " entries, expected " + std::to_string(n));
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = parse_entry(row, row.tokens[k]);
    }
    return m;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

} // namespace

AnyGraph read_graph_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_graph(in);
}

ExactMatrix read_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_matrix(in);
}

void write_graph(std::ostream& out, const BipartiteMultigraph& g) {
    out << "bipartite " << g.left_count() << " " << g.right_count() << " " << g.edge_count()
        << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << "e " << g.left_of(e) + 1 << " " << g.right_of(e) + 1 << "\n";
}

void write_graph(std::ostream& out, const GeneralGraph& g) {
    out << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.endpoints(e);
        out << "e " << u + 1 << " " << v + 1 << "\n";
    }
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
    out << "matrix " << m.size() << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t k = 0; k < m.size(); ++k)
            out << (k ? " " : "") << m.at(i, k).get_str();
        out << "\n";
    }
}

} // namespace bifactor::io
