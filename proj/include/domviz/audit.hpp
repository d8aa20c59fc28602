#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domviz/graph.hpp"
#include "domviz/partition.hpp"
#include "domviz/product.hpp"
#include "domviz/roman.hpp"
#include "domviz/solvers.hpp"

namespace domviz {

// ---------------------------------------------------------------------------
// Proof trace: the extensional record of one instantiation of the chain
//   gamma(G)gamma(H) <= N + |V_1| + |V_2| <= |V_1| + 2|V_2| = gamma_R(G□H).
// Sets are stored explicitly so a third party can re-verify without solvers.
// ---------------------------------------------------------------------------

struct BlockTrace {
    VertexSet d;           // D_i = (Pi_i × V(H)) ∩ D, product ids
    VertexSet projection;  // P_i = projection of D_i onto H
    int undominated = 0;   // |V(H) - N_H[P_i]|
    int l_size = 0;        // |L_i|
};

struct ColumnTrace {
    VertexSet q;     // Q_v = {u : (u,v) in V_2}, G ids
    int r_size = 0;  // |R_v|
};

struct TraceChecks {
    bool f_partitions_product = false;
    bool f_valid_rdf = false;
    bool weight_consistency = false;       // |V_1| + 2|V_2| == recorded gamma_R(G□H)
    bool partition_valid = false;
    bool d_dominates_product = false;      // D = V_1 ∪ V_2 dominates G□H
    bool v2_dominates_v0 = false;          // V_2 dominates G□H - V_1
    bool v2_gamma_set_of_induced = false;  // |V_2| = gamma((G□H)[V_0 ∪ V_2]), solved at audit time
    bool slices_partition_d = false;       // sum |D_i| = |D|
    bool columns_partition_v2 = false;     // sum |Q_v| = |V_2|
    bool projection_dominating = false;    // P_i ∪ (V(H) - N_H[P_i]) dominates H, every i
    bool projection_bound = false;         // |V(H) - N_H[P_i]| >= gamma(H) - |P_i|, every i
    bool l_membership = false;             // v undominated by P_i  =>  (i,v) in C
    bool counting_identity = false;        // |C| = sum |L_i| = sum |R_v| = N
    bool c_criterion_equivalence = false;  // product-level and factor-level C tests agree
    bool exchange_bound = false;           // |R_v| <= |Q_v| for every column
    bool n_lower_bound = false;            // N >= gamma gamma - |V_1| - |V_2|
    bool n_upper_bound = false;            // N <= |V_2|
    bool final_chain = false;              // the displayed chain, ending at gamma_R(G□H)

    bool all() const;
};

struct ProofTrace {
    Graph g, h;
    std::string g_label, h_label;
    int gamma_g = 0;
    int gamma_h = 0;
    int gamma_r_product = 0;
    std::vector<int> gamma_h_witness;  // dominating set of H attaining gamma_h
    RomanFunction f;                   // over product ids (u * |V(H)| + v)
    DominatorPartition partition;
    TieBreak tie_break = TieBreak::smallest_index;
    std::uint64_t tie_seed = 0;
    std::vector<BlockTrace> blocks;
    std::vector<ColumnTrace> columns;
    std::vector<std::pair<int, int>> c_pairs;  // (block index, h vertex), lexicographic
    long long n_count = 0;
    int lemma2_induced_gamma = -1;  // -1 when V_0 ∪ V_2 is empty (vacuous)
    TraceChecks checks;
};

// ---------------------------------------------------------------------------
// The individual proof steps, exposed so tests can drive them with arbitrary
// (including deliberately broken) inputs.
// ---------------------------------------------------------------------------

struct SliceSet {
    std::vector<VertexSet> d_blocks;     // product ids per block
    std::vector<VertexSet> projections;  // H ids per block
    bool partitions_d = false;
};

// D_i and P_i for D = V_1 ∪ V_2. Does not re-validate f; audit_pair does.
SliceSet compute_slices(const RomanFunction& f, const DominatorPartition& partition,
                        const LabeledProduct& product);

struct ProjectionBoundCheck {
    int undominated_count = 0;      // |V(H) - N_H[P_i]|
    bool union_dominates = false;   // P_i ∪ (V(H) - N_H[P_i]) dominates H
    bool bound_holds = false;       // undominated_count >= gamma_h - |P_i|
};

ProjectionBoundCheck check_projection_bound(const Graph& h, const VertexSet& p_i, int gamma_h);

// Q_v per column v of the product.
std::vector<VertexSet> compute_columns(const RomanFunction& f, const LabeledProduct& product);

struct CComputation {
    std::vector<std::pair<int, int>> pairs;  // C, lexicographic (i, v)
    std::vector<int> l_sizes;                // per block
    std::vector<int> r_sizes;                // per column
    long long n_count = 0;
    bool counting_identity = false;
    bool factor_product_agree = false;  // Pi_i×{v} ⊆ N_{G□H}[Q_v] vs Pi_i ⊆ N_G[Q_v]
};

// C = {(i,v) : Pi_i × {v} ⊆ N_{G□H}[Q_v × {v}]}, computed both at product
// level and through the factor-level shortcut, with the agreement recorded.
CComputation compute_c(const Graph& g, const DominatorPartition& partition,
                       const std::vector<VertexSet>& columns, const LabeledProduct& product);

struct LMembershipCheck {
    bool holds = false;
    std::vector<std::pair<int, int>> violations;  // pairs forced into C but missing
};

// Every (i, v) with v undominated by P_i must lie in C; valid only when V_2
// dominates G□H - V_1, which optimal f guarantees.
LMembershipCheck check_l_membership(const Graph& h, const std::vector<VertexSet>& projections,
                                    const CComputation& c);

struct NBoundsDefect {
    int column = -1;
    std::vector<int> replacement;  // Q_v ∪ {u_j : (j,v) not in C}
    bool replacement_dominates = false;
    std::string detail;
};

struct NBoundsCheck {
    bool lower_holds = false;     // N >= gamma gamma - |V_1| - |V_2|
    bool upper_holds = false;     // N <= |V_2|
    bool exchange_holds = false;  // |R_v| <= |Q_v| for every v
    std::optional<NBoundsDefect> defect;
};

// Verifies both N bounds. A column with |R_v| > |Q_v| is impossible for
// honest inputs; when it is hit (corrupted traces), the replacement set from
// the exchange argument is built and exhibited: either it dominates G below
// gamma(G) — contradicting gamma(G) — or the recorded R_v disagrees with C.
NBoundsCheck check_n_bounds(const Graph& g, const DominatorPartition& partition,
                            const std::vector<VertexSet>& columns,
                            const std::vector<int>& r_sizes,
                            const std::vector<std::pair<int, int>>& c_pairs, long long n_count,
                            int gamma_g, int gamma_h, int v1_size, int v2_size);

// ---------------------------------------------------------------------------
// Full pipeline.
// ---------------------------------------------------------------------------

struct AuditReport {
    std::string g_label, h_label;
    std::string g_graph6, h_graph6;
    int g_order = 0, h_order = 0, product_order = 0;
    int gamma_g = 0, gamma_h = 0, gamma_product = 0, gamma_r_product = 0;
    int gamma_gamma = 0;
    int two_gamma_product = 0;
    int gap = 0;                  // gamma_R(G□H) - gamma(G)gamma(H)
    bool theorem2 = false;        // gamma gamma <= gamma_R(G□H)
    bool theorem1 = false;        // gamma gamma <= 2 gamma(G□H)
    bool lemma1_product = false;  // gamma <= gamma_R <= 2 gamma on the product
    bool checks_all = false;
};

struct AuditOutcome {
    SolveStatus status = SolveStatus::solved;
    std::string failed_stage;  // which solve blew the budget, empty when solved
    AuditReport report;
    ProofTrace trace;          // meaningful only when status == solved
    std::uint64_t nodes_total = 0;

    bool ok() const { return status == SolveStatus::solved; }
    bool all_verdicts() const {
        return ok() && report.theorem2 && report.theorem1 && report.lemma1_product &&
               report.checks_all;
    }
};

// Solve gamma(G), gamma(H), gamma(G□H), gamma_R(G□H), then instantiate and
// check every step of the chain on the witnesses.
AuditOutcome audit_pair(const Graph& g, const Graph& h, const SolverBudget& budget = {},
                        TieBreak tie_break = TieBreak::smallest_index, std::uint64_t seed = 0,
                        const std::string& g_label = "", const std::string& h_label = "");

// Same pipeline but with a caller-supplied RDF on G□H. Refuses a non-optimal
// f unless require_optimal is false (the L-membership premise — V_2 dominates
// G□H - V_1 — is only guaranteed for optimal f).
AuditOutcome audit_pair_with_rdf(const Graph& g, const Graph& h, const RomanFunction& f,
                                 bool require_optimal = true, const SolverBudget& budget = {},
                                 TieBreak tie_break = TieBreak::smallest_index,
                                 std::uint64_t seed = 0, const std::string& g_label = "",
                                 const std::string& h_label = "");

// gamma_R(K_2) = 2 yet gamma_R(K_2□K_2) = 3 < 4: the Roman analogue of
// Vizing's inequality fails on the smallest nontrivial product.
struct RemarkVerdict {
    int gamma_r_k2 = 0;
    int gamma_r_product = 0;
    int gamma_product = 0;
    bool analogue_fails = false;  // gamma_R(K_2)^2 > gamma_R(K_2□K_2)
    bool sanity_lower = false;    // gamma_R(K_2□K_2) >= gamma(K_2□K_2)
    bool sanity_upper = false;    // gamma_R(K_2□K_2) <= 2 gamma(K_2□K_2)
};

RemarkVerdict check_remark(const SolverBudget& budget = {});

}  // namespace domviz
