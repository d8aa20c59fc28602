#pragma once

#include <vector>

#include "domviz/graph.hpp"

namespace domviz {

// Every simple graph of the exact order n up to isomorphism, by exhausting
// edge masks and keeping lexicographic-minimum representatives over all
// vertex permutations. Practical for n <= 6 (larger orders throw).
std::vector<Graph> all_graphs_up_to_iso(int n, bool connected_only);

// Orders 1..max_n concatenated, ascending order then enumeration order.
std::vector<Graph> small_graph_corpus(int max_n, bool connected_only);

}  // namespace domviz
