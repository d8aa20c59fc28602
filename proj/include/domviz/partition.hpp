#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domviz/graph.hpp"

namespace domviz {

// How a non-representative vertex picks among the representatives whose
// closed neighborhood contains it. The partition is not unique; smallest
// index is the reproducible default and the alternatives exist to show the
// audit verdicts do not depend on the choice.
enum class TieBreak { smallest_index, largest_index, seeded };

const char* to_string(TieBreak tb);

// Inverse of to_string. Throws std::invalid_argument on an unknown name.
TieBreak tie_break_from_string(const std::string& name);

// A gamma-set u_1..u_k of G together with blocks Pi_1..Pi_k partitioning
// V(G), where u_i is in Pi_i and every other member of Pi_i is adjacent
// to u_i.
struct DominatorPartition {
    std::vector<int> representatives;
    std::vector<VertexSet> blocks;
};

// Builds the partition for an ordered gamma-set: representatives claim
// themselves first, every other vertex joins the block picked by the tie
// break among eligible representatives. gamma_value pins the expected size
// of the set (the caller certifies it equals gamma(G)).
DominatorPartition build_partition(const Graph& g, const std::vector<int>& gamma_set,
                                   int gamma_value, TieBreak tie_break = TieBreak::smallest_index,
                                   std::uint64_t seed = 0);

// Blocks partition V(G), each representative sits in its own block, and every
// block member equals or is adjacent to the representative.
bool partition_is_valid(const Graph& g, const DominatorPartition& p);

}  // namespace domviz
