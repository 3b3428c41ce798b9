#pragma once

#include "floodpoly/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace floodpoly {

/// Edge-list text format: first line "n m", then m lines "u v" (1-indexed).
/// Blank lines and lines starting with '#' are ignored. Throws ParseError.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6: standard ASCII encoding of undirected graphs (n <= 62 supported:
/// one header byte 63+n, then the upper triangle column-major, six bits per
/// byte offset by 63).
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);
/// One graph per line; optional ">>graph6<<" header line is skipped.
std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace floodpoly
