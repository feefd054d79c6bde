#ifndef DEFPART_IO_HPP
#define DEFPART_IO_HPP

#include <string>

#include "defpart/graph.hpp"

namespace defpart {

enum class GraphFormat { dimacs, edgelist };

/// DIMACS .col: `c` comments, one `p edge <n> <m>` header, `e <u> <v>`
/// lines with 1-based endpoints. Duplicate edges collapse silently.
///
/// Edge list: one `u v` pair per line, 0-based; a line with a single id
/// declares an isolated vertex; blank lines and `#` comments ignored.
Graph load_graph(const std::string& text, GraphFormat format);

std::string emit_graph(const Graph& g, GraphFormat format);

Graph load_graph_file(const std::string& path, GraphFormat format);

}  // namespace defpart

#endif
