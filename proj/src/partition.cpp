#include "domviz/partition.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace domviz {

const char* to_string(TieBreak tb) {
    switch (tb) {
        case TieBreak::smallest_index: return "smallest-index";
        case TieBreak::largest_index: return "largest-index";
        case TieBreak::seeded: return "seeded";
    }
    return "unknown";
}

TieBreak tie_break_from_string(const std::string& name) {
    if (name == "smallest-index") return TieBreak::smallest_index;
    if (name == "largest-index") return TieBreak::largest_index;
    if (name == "seeded") return TieBreak::seeded;
    throw std::invalid_argument("unknown tie break \"" + name + "\"");
}

DominatorPartition build_partition(const Graph& g, const std::vector<int>& gamma_set,
                                   int gamma_value, TieBreak tie_break, std::uint64_t seed) {
    const int n = g.order();
    const int k = static_cast<int>(gamma_set.size());
    if (k != gamma_value)
        throw std::invalid_argument("build_partition: set has size " + std::to_string(k) +
                                    ", expected gamma = " + std::to_string(gamma_value));
    VertexSet members(n);
    for (int u : gamma_set) {
        if (u < 0 || u >= n)
            throw std::invalid_argument("build_partition: representative out of range");
        if (members.contains(u))
            throw std::invalid_argument("build_partition: duplicate representative " +
                                        std::to_string(u));
        members.add(u);
    }
    if (!is_dominating(g, members))
        throw std::invalid_argument("build_partition: set is not dominating");

    DominatorPartition out;
    out.representatives = gamma_set;
    out.blocks.assign(static_cast<std::size_t>(k), VertexSet(n));
    std::vector<int> rep_block(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < k; ++i) { // property (i): representatives claim themselves first
        out.blocks[static_cast<std::size_t>(i)].add(gamma_set[static_cast<std::size_t>(i)]);
        rep_block[static_cast<std::size_t>(gamma_set[static_cast<std::size_t>(i)])] = i;
    }

    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u) {
        if (rep_block[static_cast<std::size_t>(u)] >= 0) continue;
        std::vector<int> eligible;
        for (int i = 0; i < k; ++i)
            if (g.adjacent(u, gamma_set[static_cast<std::size_t>(i)])) eligible.push_back(i);
        // nonempty: the set dominates and u is not a representative
        int pick;
        switch (tie_break) {
            case TieBreak::smallest_index: pick = eligible.front(); break;
            case TieBreak::largest_index: pick = eligible.back(); break;
            case TieBreak::seeded:
            default:
                pick = eligible[static_cast<std::size_t>(rng() % eligible.size())];
                break;
        }
        out.blocks[static_cast<std::size_t>(pick)].add(u);
    }
    return out;
}

bool partition_is_valid(const Graph& g, const DominatorPartition& p) {
    const int n = g.order();
    const int k = static_cast<int>(p.representatives.size());
    if (static_cast<int>(p.blocks.size()) != k || k == 0) return false;
    VertexSet seen(n);
    for (int i = 0; i < k; ++i) {
        const int u_i = p.representatives[static_cast<std::size_t>(i)];
        if (u_i < 0 || u_i >= n) return false;
        const VertexSet& block = p.blocks[static_cast<std::size_t>(i)];
        if (block.universe() != n) return false;
        if (!block.contains(u_i)) return false;                       // property (i)
        if (block.intersects(seen)) return false;                     // pairwise disjoint
        for (int u : block)
            if (u != u_i && !g.adjacent(u, u_i)) return false;        // property (ii)
        seen |= block;
    }
    return seen.count() == n;  // union = V(G)
}

}  // namespace domviz
