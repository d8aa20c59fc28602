#pragma once

#include <cstdint>

#include "domviz/graph.hpp"

namespace domviz {

Graph path_graph(int n);            // P_n, n >= 1
Graph cycle_graph(int n);           // C_n, n >= 3
Graph complete_graph(int n);        // K_n, n >= 1
Graph complete_bipartite(int a, int b);
Graph star_graph(int n);            // n vertices total, center 0; K_{1,n-1}
Graph empty_graph(int n);           // n vertices, no edges
Graph petersen_graph();             // outer C_5 0..4, inner pentagram 5..9

// Reproducible G(n, p). RNG contract (bit-exact across platforms, see README):
// std::mt19937_64 seeded with `seed`, one draw per unordered pair in
// lexicographic order (0,1),(0,2),...,(n-2,n-1); the edge is present iff
// (draw >> 11) * 2^-53 < p. No distribution object is involved, so the edge
// stream depends only on (n, p, seed).
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace domviz
