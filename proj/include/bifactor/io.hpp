#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "bifactor/graph.hpp"
#include "bifactor/matrix.hpp"

// Plain text formats, parsed strictly (wrong counts, bad tokens and
// out-of-range labels are ParseErrors). Lines whose first non-blank
// character is '#' are comments; blank lines are skipped. Vertex labels in
// files are 1-based.
//
//   bipartite <n_left> <n_right> <m>     graph <n> <m>       matrix <n>
//   e <left> <right>   (m lines)         e <u> <v>           n rows of n
//                                                            entries, each an
//                                                            integer or p/q
namespace bifactor::io {

using AnyGraph = std::variant<BipartiteMultigraph, GeneralGraph>;

AnyGraph read_graph(std::istream& in);
ExactMatrix read_matrix(std::istream& in);

AnyGraph read_graph_file(const std::string& path);
ExactMatrix read_matrix_file(const std::string& path);

void write_graph(std::ostream& out, const BipartiteMultigraph& g);
void write_graph(std::ostream& out, const GeneralGraph& g);
void write_matrix(std::ostream& out, const ExactMatrix& m);

} // namespace bifactor::io
