#pragma once

#include "domviz/graph.hpp"

namespace domviz {

// Exhaustive ground-truth computations, independent of the branch-and-bound
// path. Deliberately dumb: subsets by increasing size, bitmask completions,
// full labelings. Order caps throw.

// gamma(G) by enumerating k-subsets for k = 1, 2, ...; n <= 16.
int brute_force_gamma(const Graph& g);

// gamma_R(G) as min over all 2^n sets S of 2|S| + (n - |N[S]|); n <= 16.
int brute_force_gamma_roman(const Graph& g);

// gamma_R(G) by checking all 3^n labelings directly; n <= 12. Exists to
// cross-check the fixed-V_2 completion identity used everywhere else.
int brute_force_gamma_roman_labelings(const Graph& g);

}  // namespace domviz
