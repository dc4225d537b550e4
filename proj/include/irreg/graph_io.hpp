#pragma once

// Edge-list text format:
//
//   # comment
//   n 10        (optional, must precede any edge line)
//   0 1
//   1 2
//
// Without an "n" line the vertex count is 1 + the largest index, and every
// index below it must occur in some edge.

#include <iosfwd>
#include <string>

#include "irreg/graph.hpp"

namespace irreg {

Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// "n <count>" followed by one "u v" line per edge, u < v, sorted.
void save_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

} // namespace irreg
