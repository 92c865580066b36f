#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "msc/graph.hpp"

namespace msc {

enum class GraphFormat { Graph6, EdgeList };

struct GraphDocument {
  Graph graph;
  std::string source_id;  ///< "file:line" for graph6, "file" for edge lists
  GraphFormat format = GraphFormat::Graph6;
};

/// Decodes one graph6 line (no trailing newline; an optional ">>graph6<<"
/// prefix is accepted). ParseError positions are byte offsets into `line`.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/**
 * Edge-list text: a header line "n m" followed by m lines "u v" with 0-based
 * labels. Blank lines and lines starting with '#' are ignored. Self-loops,
 * repeated edges, out-of-range labels and a wrong edge count are rejected;
 * ParseError positions are 1-based line numbers.
 */
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

/// Every non-blank line of a graph6 stream, ids "<source>:<line>".
std::vector<GraphDocument> read_graph6_stream(std::istream& in, std::string_view source);

/**
 * Loads graphs from `spec`:
 *   "g6:<code>"  one inline graph6 string,
 *   "-"          standard input,
 *   otherwise    a file path.
 * Files ending in .g6 / .graph6 are graph6, .el / .edges / .txt are edge
 * lists; anything else is sniffed from its first meaningful line (two
 * integers means an edge list).
 */
std::vector<GraphDocument> load_graphs(const std::string& spec);

}  // namespace msc
