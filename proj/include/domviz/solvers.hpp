#pragma once

#include <cstdint>

#include "domviz/graph.hpp"
#include "domviz/roman.hpp"

namespace domviz {

// Caps on exact search. Exceeding a cap yields a budget/order outcome with no
// value — never an approximate answer.
struct SolverBudget {
    std::uint64_t max_nodes = 50'000'000;
    int max_order = 4096;
};

enum class SolveStatus { solved, budget_exceeded, order_exceeded };

const char* to_string(SolveStatus s);

// Exact gamma(G) with a witness dominating set. value/witness are meaningful
// only when status == solved; nodes_explored is always filled.
struct GammaResult {
    SolveStatus status = SolveStatus::solved;
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;

    bool ok() const { return status == SolveStatus::solved; }
};

// Exact gamma_R(G) with a witness RDF.
struct RomanResult {
    SolveStatus status = SolveStatus::solved;
    int value = 0;
    RomanFunction witness;
    std::uint64_t nodes_explored = 0;

    bool ok() const { return status == SolveStatus::solved; }
};

// Deterministic greedy dominating set: repeatedly take the vertex covering
// the most currently-undominated vertices, smallest id on ties. Used as the
// initial incumbent of both searches.
VertexSet greedy_dominating_set(const Graph& g);

// Branch and bound as minimum set cover by closed neighborhoods: pick the
// lowest-indexed undominated vertex v, branch on each candidate in N[v]
// ordered by descending new coverage (smallest id on ties), prune when
// |current| + ceil(uncovered / max coverage) >= incumbent. Fully
// deterministic, so the witness is reproducible across runs and platforms.
GammaResult gamma_exact(const Graph& g, const SolverBudget& budget = {});

// Branch and bound over V_2 with the fixed-V_2 completion folded in: the
// weight of the best RDF with V_2 = S is exactly 2|S| + (n - |N[S]|), so the
// search resolves the lowest-indexed uncovered vertex v either by adding one
// of N[v] to V_2 (cost 2) or by assigning v the value 1 (cost 1, tried last).
// Same deterministic candidate order as gamma_exact.
RomanResult gamma_roman_exact(const Graph& g, const SolverBudget& budget = {});

}  // namespace domviz
