#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domviz/graph.hpp"

namespace domviz {

struct GraphSource {
    std::string label;
    Graph graph;
};

// Family-spec mini-language, one spec -> one or more labeled graphs:
//   path:N  cycle:N  complete:N  star:N  empty:N     (N may be a range A..B)
//   complete_bipartite:A,B
//   random:N,P[,SEED]          N may be a range; SEED defaults to
//                              default_seed and advances by one per instance
//   all:N | connected:N        every graph of order N up to isomorphism
//                              (N may be a range, capped at 6)
//   g6:STRING                  inline graph6
//   PATH                       existing file of graph6 lines, one source per
//                              line, labeled PATH#k
// Unknown names, malformed parameters, and out-of-range values throw
// std::invalid_argument.
std::vector<GraphSource> expand_spec(const std::string& spec,
                                     std::uint64_t default_seed = 0);

// All specs expanded in order into one list.
std::vector<GraphSource> expand_specs(const std::vector<std::string>& specs,
                                      std::uint64_t default_seed = 0);

}  // namespace domviz
