#pragma once

#include "domviz/graph.hpp"
#include "domviz/roman.hpp"
#include "domviz/solvers.hpp"

namespace domviz {

// gamma(G) <= gamma_R(G) <= 2 gamma(G). False on any input means a solver
// defect, not a property of the graph.
struct Lemma1Verdict {
    SolveStatus status = SolveStatus::solved;
    int gamma = 0;
    int gamma_roman = 0;
    bool holds = false;
};

Lemma1Verdict check_lemma1(const Graph& g, const SolverBudget& budget = {});

// For an optimal RDF f = (V_0, V_1, V_2): V_2 is a gamma-set of G[V_0 ∪ V_2].
// Checked in two parts: (a) V_2 dominates the induced subgraph, (b) |V_2|
// equals its domination number. Empty V_0 ∪ V_2 is vacuously true.
struct Lemma2Verdict {
    SolveStatus status = SolveStatus::solved;
    bool optimal_precondition = false;  // weight(f) == gamma_R(G); reported, never assumed
    bool vacuous = false;
    bool v2_dominates_induced = false;
    bool v2_is_gamma_set = false;
    int induced_gamma = 0;

    bool holds() const {
        return status == SolveStatus::solved && optimal_precondition &&
               (vacuous || (v2_dominates_induced && v2_is_gamma_set));
    }
};

Lemma2Verdict check_lemma2(const Graph& g, const RomanFunction& f, const SolverBudget& budget = {});

}  // namespace domviz
