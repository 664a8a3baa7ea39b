#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace sclq {

enum class GraphFormat { graph6, edge_list };

GraphFormat parse_format(std::string_view name);
std::string format_name(GraphFormat format);

/// graph6: size prefix, then the upper triangle in column order
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, MSB first,
/// each byte offset by 63. No trailing newline.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. A leading ">>graph6<<" header is accepted;
/// any other ">>" header, sparse6 (':') and digraph6 ('&') lines are rejected.
Graph from_graph6(std::string_view line);

/// "n m", then m lines "u v". No trailing newline after the last edge.
std::string to_edge_list(const Graph& g);

/// Reads every graph in a stream. graph6: one graph per non-empty line.
/// Edge list: consecutive "n m" blocks. In both formats a line starting
/// with '#' is a comment.
/// Parse failures throw ErrorCode::parse with the 1-based line number.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);
std::vector<Graph> read_graphs(std::string_view text, GraphFormat format);

}  // namespace sclq
