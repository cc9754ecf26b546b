#ifndef MCX_GRAPH_IO_HPP
#define MCX_GRAPH_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "mcx/graph.hpp"

namespace mcx {

// Text format: header line "n m", then m lines "u v" with 0-based
// endpoints.  Whitespace tolerant; lines starting with '#' are ignored;
// the edge count must match the header.
Graph parse_graph_file(std::istream& in);
Graph parse_graph_file(const std::string& text);
std::string serialize_graph_file(const Graph& g);

// graph6 (one line, n <= 62 supported).
Graph parse_graph6(const std::string& line);
std::string serialize_graph6(const Graph& g);

// Named example graphs shipped with the CLI (pinned edge lists).
std::optional<Graph> builtin_graph(const std::string& name);
std::vector<std::string> builtin_graph_names();

} // namespace mcx

#endif // MCX_GRAPH_IO_HPP
