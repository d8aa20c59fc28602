#pragma once

#include "domviz/graph.hpp"
#include "domviz/vertex_set.hpp"

namespace domviz {

// Ordered partition (V_0, V_1, V_2) of a graph's vertex set; the level sets
// of a {0,1,2}-labeling. Validity as a Roman dominating function (every
// 0-vertex has a 2-neighbor) is asserted by is_rdf, not by construction.
struct RomanFunction {
    VertexSet v0, v1, v2;
};

// True iff (v0, v1, v2) are pairwise disjoint and cover [0, n).
bool is_partition(const RomanFunction& f, int n);

// True iff every v0 vertex has a neighbor in v2. Throws if f does not
// partition V(G).
bool is_rdf(const Graph& g, const RomanFunction& f);

// w(f) = |v1| + 2|v2|.
int roman_weight(const RomanFunction& f);

// Minimum-weight completion for a fixed V_2 = s: vertices outside N[s] get
// value 1, everything else in N[s] \ s gets 0. Weight is 2|s| + (n - |N[s]|).
RomanFunction rdf_from_v2(const Graph& g, const VertexSet& s);

}  // namespace domviz
