#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "domviz/graph.hpp"

namespace domviz {

// graph6: McKay's compact ASCII encoding of simple graphs. One line per
// graph: an order header, then the upper triangle of the adjacency matrix
// packed column-major, 6 bits per printable character offset by 63.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Every graph6 line of a file; blank lines and the optional ">>graph6<<"
// header are skipped.
std::vector<Graph> read_graph6_file(const std::string& path);

// Adjacency-list text format for human-authored fixtures:
// header "n m", then one "u v" edge per line.
Graph parse_adjacency_text(std::istream& in);
Graph read_adjacency_file(const std::string& path);
void write_adjacency_text(const Graph& g, std::ostream& out);

}  // namespace domviz
