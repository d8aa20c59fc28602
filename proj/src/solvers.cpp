#include "domviz/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace domviz {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::solved: return "solved";
        case SolveStatus::budget_exceeded: return "budget-exceeded";
        case SolveStatus::order_exceeded: return "order-exceeded";
    }
    return "unknown";
}

VertexSet greedy_dominating_set(const Graph& g) {
    const int n = g.order();
    VertexSet chosen(n);
    VertexSet covered(n);
    while (covered.count() < n) {
        int best = -1, best_cov = -1;
        for (int u = 0; u < n; ++u) {
            const int cov = g.closed_neighbors(u).count_minus(covered);
            if (cov > best_cov) {
                best_cov = cov;
                best = u;
            }
        }
        chosen.add(best);
        covered |= g.closed_neighbors(best);
    }
    return chosen;
}

namespace {

// Candidates in N[v] sorted by descending coverage of currently-undominated
// vertices, smallest id on ties. `skip` masks vertices that may not enter the
// solution (the value-1 vertices of the Roman search).
std::vector<int> ordered_candidates(const Graph& g, int v, const VertexSet& covered,
                                    const VertexSet* skip) {
    std::vector<std::pair<int, int>> scored;  // (-coverage, id)
    for (int c : g.closed_neighbors(v)) {
        if (skip && skip->contains(c)) continue;
        scored.emplace_back(-g.closed_neighbors(c).count_minus(covered), c);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<int> out;
    out.reserve(scored.size());
    for (auto& [neg, c] : scored) out.push_back(c);
    return out;
}

int max_new_coverage(const Graph& g, const VertexSet& covered) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u)
        best = std::max(best, g.closed_neighbors(u).count_minus(covered));
    return best;
}

struct GammaSearch {
    const Graph& g;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    int best_size;
    std::vector<int> best;
    std::vector<int> current;

    GammaSearch(const Graph& graph, std::uint64_t cap) : g(graph), max_nodes(cap) {}

    void run(const VertexSet& covered, int uncovered) {
        if (budget_hit) return;
        if (++nodes > max_nodes) {
            budget_hit = true;
            return;
        }
        if (uncovered == 0) {
            if (static_cast<int>(current.size()) < best_size) {
                best_size = static_cast<int>(current.size());
                best = current;
            }
            return;
        }
        const int max_cov = max_new_coverage(g, covered);
        const int lower = static_cast<int>(current.size()) + (uncovered + max_cov - 1) / max_cov;
        if (lower >= best_size) return;

        const int v = covered.complement().first();
        for (int c : ordered_candidates(g, v, covered, nullptr)) {
            VertexSet next_covered = covered | g.closed_neighbors(c);
            current.push_back(c);
            run(next_covered, g.order() - next_covered.count());
            current.pop_back();
            if (budget_hit) return;
        }
    }
};

struct RomanSearch {
    const Graph& g;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    int best_cost;
    VertexSet best_v2, best_v1;
    VertexSet cur_v2, cur_v1;

    RomanSearch(const Graph& graph, std::uint64_t cap)
        : g(graph),
          max_nodes(cap),
          best_v2(graph.order()),
          best_v1(graph.order()),
          cur_v2(graph.order()),
          cur_v1(graph.order()) {}

    // covered = N[V_2] so far; resolved = covered plus value-1 vertices.
    void run(const VertexSet& covered, const VertexSet& resolved, int cost) {
        if (budget_hit) return;
        if (++nodes > max_nodes) {
            budget_hit = true;
            return;
        }
        const int unresolved = g.order() - resolved.count();
        if (unresolved == 0) {
            if (cost < best_cost) {
                best_cost = cost;
                best_v2 = cur_v2;
                best_v1 = cur_v1;
            }
            return;
        }
        // Admissible remaining-cost bound: a V_2 vertex pays 2 for at most
        // max_cov resolutions, a value-1 pays 1 for one; so each resolution
        // costs at least 2/max_cov once max_cov >= 2, and at least 1 below.
        const int max_cov = max_new_coverage(g, resolved);
        const int lower = max_cov >= 2 ? (2 * unresolved + max_cov - 1) / max_cov : unresolved;
        if (cost + lower >= best_cost) return;

        const int v = resolved.complement().first();
        for (int c : ordered_candidates(g, v, resolved, &cur_v1)) {
            cur_v2.add(c);
            run(covered | g.closed_neighbors(c), resolved | g.closed_neighbors(c), cost + 2);
            cur_v2.remove(c);
            if (budget_hit) return;
        }
        // Value-1 branch, tried last: v stays uncovered and pays 1.
        VertexSet next_resolved = resolved;
        next_resolved.add(v);
        cur_v1.add(v);
        run(covered, next_resolved, cost + 1);
        cur_v1.remove(v);
    }
};

}  // namespace

GammaResult gamma_exact(const Graph& g, const SolverBudget& budget) {
    if (g.order() < 1) throw std::invalid_argument("gamma_exact: order-0 graph");
    GammaResult out;
    if (g.order() > budget.max_order) {
        out.status = SolveStatus::order_exceeded;
        return out;
    }
    const VertexSet greedy = greedy_dominating_set(g);
    GammaSearch search(g, budget.max_nodes);
    search.best_size = greedy.count();
    search.best = greedy.to_vector();
    search.run(VertexSet(g.order()), g.order());
    out.nodes_explored = search.nodes;
    if (search.budget_hit) {
        out.status = SolveStatus::budget_exceeded;
        return out;
    }
    out.value = search.best_size;
    out.witness = VertexSet(g.order());
    for (int v : search.best) out.witness.add(v);
    assert(is_dominating(g, out.witness) && out.witness.count() == out.value);
    return out;
}

RomanResult gamma_roman_exact(const Graph& g, const SolverBudget& budget) {
    if (g.order() < 1) throw std::invalid_argument("gamma_roman_exact: order-0 graph");
    RomanResult out;
    if (g.order() > budget.max_order) {
        out.status = SolveStatus::order_exceeded;
        return out;
    }
    RomanSearch search(g, budget.max_nodes);
    const VertexSet greedy = greedy_dominating_set(g);
    if (2 * greedy.count() <= g.order()) {
        search.best_cost = 2 * greedy.count();
        search.best_v2 = greedy;
    } else {
        search.best_cost = g.order();  // all-ones labeling
        search.best_v1 = VertexSet::full(g.order());
    }
    search.run(VertexSet(g.order()), VertexSet(g.order()), 0);
    out.nodes_explored = search.nodes;
    if (search.budget_hit) {
        out.status = SolveStatus::budget_exceeded;
        return out;
    }
    out.value = search.best_cost;
    out.witness.v2 = search.best_v2;
    out.witness.v1 = search.best_v1;
    out.witness.v0 = (search.best_v1 | search.best_v2).complement();
    assert(is_rdf(g, out.witness) && roman_weight(out.witness) == out.value);
    return out;
}

}  // namespace domviz
