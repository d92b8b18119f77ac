#pragma once

// Text formats: graph6 (one graph per line) and a plain edge list
// ("n m" header followed by m lines "u v", 0-based).

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gaindex/graph.hpp"

namespace gaindex {

std::string to_graph6(const Graph& g);

/// One graph6 record. A leading ">>graph6<<" header and a trailing newline are
/// accepted. Throws ParseError carrying the byte offset of the problem.
Graph parse_graph6(std::string_view text);

/// All non-empty lines of a graph6 stream. ParseError::line() is 1-based.
std::vector<Graph> read_graph6(std::istream& in);

/// "n m\n" then one "u v\n" line per edge in lexicographic order.
std::string to_edge_list(const Graph& g);

/// One or more concatenated edge-list blocks. Blank lines and lines starting
/// with '#' are ignored.
std::vector<Graph> parse_edge_lists(std::string_view text);
Graph parse_edge_list(std::string_view text);

}  // namespace gaindex
