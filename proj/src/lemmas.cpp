#include "domviz/lemmas.hpp"

#include <stdexcept>

namespace domviz {

Lemma1Verdict check_lemma1(const Graph& g, const SolverBudget& budget) {
    Lemma1Verdict out;
    const GammaResult gamma = gamma_exact(g, budget);
    if (!gamma.ok()) {
        out.status = gamma.status;
        return out;
    }
    const RomanResult roman = gamma_roman_exact(g, budget);
    if (!roman.ok()) {
        out.status = roman.status;
        return out;
    }
    out.gamma = gamma.value;
    out.gamma_roman = roman.value;
    out.holds = gamma.value <= roman.value && roman.value <= 2 * gamma.value;
    return out;
}

Lemma2Verdict check_lemma2(const Graph& g, const RomanFunction& f, const SolverBudget& budget) {
    if (!is_partition(f, g.order()))
        throw std::invalid_argument("check_lemma2: f does not partition V(G)");
    Lemma2Verdict out;

    const RomanResult optimum = gamma_roman_exact(g, budget);
    if (!optimum.ok()) {
        out.status = optimum.status;
        return out;
    }
    out.optimal_precondition = is_rdf(g, f) && roman_weight(f) == optimum.value;
    if (!out.optimal_precondition) return out;  // violation is reported, not silently accepted

    const VertexSet support = f.v0 | f.v2;
    if (support.empty()) {
        out.vacuous = true;  // every vertex has value 1
        return out;
    }
    const InducedSubgraph sub = induced_subgraph(g, support, AllowEmpty::no);
    VertexSet v2_new(sub.graph.order());
    for (int v : f.v2) v2_new.add(sub.old_to_new[static_cast<std::size_t>(v)]);
    out.v2_dominates_induced = is_dominating(sub.graph, v2_new);

    const GammaResult sub_gamma = gamma_exact(sub.graph, budget);
    if (!sub_gamma.ok()) {
        out.status = sub_gamma.status;
        return out;
    }
    out.induced_gamma = sub_gamma.value;
    out.v2_is_gamma_set = out.v2_dominates_induced && f.v2.count() == sub_gamma.value;
    return out;
}

}  // namespace domviz
