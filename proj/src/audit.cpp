#include "domviz/audit.hpp"

#include <algorithm>
#include <stdexcept>

#include "domviz/families.hpp"
#include "domviz/graph6.hpp"

namespace domviz {

bool TraceChecks::all() const {
    return f_partitions_product && f_valid_rdf && weight_consistency && partition_valid &&
           d_dominates_product && v2_dominates_v0 && v2_gamma_set_of_induced &&
           slices_partition_d && columns_partition_v2 && projection_dominating &&
           projection_bound && l_membership && counting_identity && c_criterion_equivalence &&
           exchange_bound && n_lower_bound && n_upper_bound && final_chain;
}

SliceSet compute_slices(const RomanFunction& f, const DominatorPartition& partition,
                        const LabeledProduct& product) {
    const int np = product.product.order();
    const int ng = product.g_order;
    if (f.v0.universe() != np)
        throw std::invalid_argument("compute_slices: f universe does not match product order");
    if (partition.blocks.empty() || partition.blocks.front().universe() != ng)
        throw std::invalid_argument("compute_slices: partition does not match the G factor");

    const std::size_t k = partition.blocks.size();
    std::vector<int> block_of(static_cast<std::size_t>(ng), -1);
    for (std::size_t i = 0; i < k; ++i)
        for (int u : partition.blocks[i]) block_of[static_cast<std::size_t>(u)] = static_cast<int>(i);

    SliceSet out;
    out.d_blocks.assign(k, VertexSet(np));
    out.projections.assign(k, VertexSet(product.h_order));
    const VertexSet d = f.v1 | f.v2;
    int assigned = 0;
    for (int id : d) {
        const auto [u, v] = product.decode(id);
        const int i = block_of[static_cast<std::size_t>(u)];
        if (i < 0) continue;  // blocks do not cover u; partitions_d will flag it
        out.d_blocks[static_cast<std::size_t>(i)].add(id);
        out.projections[static_cast<std::size_t>(i)].add(v);
        ++assigned;
    }
    out.partitions_d = assigned == d.count();
    return out;
}

ProjectionBoundCheck check_projection_bound(const Graph& h, const VertexSet& p_i, int gamma_h) {
    if (p_i.universe() != h.order())
        throw std::invalid_argument("check_projection_bound: P_i universe mismatch");
    ProjectionBoundCheck out;
    const VertexSet undominated = closed_neighborhood(h, p_i).complement();
    out.undominated_count = undominated.count();
    out.union_dominates = is_dominating(h, p_i | undominated);
    out.bound_holds = out.undominated_count >= gamma_h - p_i.count();
    return out;
}

std::vector<VertexSet> compute_columns(const RomanFunction& f, const LabeledProduct& product) {
    if (f.v2.universe() != product.product.order())
        throw std::invalid_argument("compute_columns: f universe does not match product order");
    std::vector<VertexSet> q(static_cast<std::size_t>(product.h_order),
                             VertexSet(product.g_order));
    for (int id : f.v2) {
        const auto [u, v] = product.decode(id);
        q[static_cast<std::size_t>(v)].add(u);
    }
    return q;
}

CComputation compute_c(const Graph& g, const DominatorPartition& partition,
                       const std::vector<VertexSet>& columns, const LabeledProduct& product) {
    const std::size_t k = partition.blocks.size();
    const std::size_t nh = columns.size();
    if (static_cast<int>(nh) != product.h_order)
        throw std::invalid_argument("compute_c: column count does not match the H factor");

    CComputation out;
    out.l_sizes.assign(k, 0);
    out.r_sizes.assign(nh, 0);
    out.factor_product_agree = true;

    std::vector<std::vector<bool>> member(k, std::vector<bool>(nh, false));
    for (std::size_t v = 0; v < nh; ++v) {
        // Factor-level test: Pi_i ⊆ N_G[Q_v].
        const VertexSet factor_nbhd = closed_neighborhood(g, columns[v]);
        // Product-level test, straight from the definition: the closed
        // neighborhood of Q_v × {v} in G□H must contain Pi_i × {v}.
        VertexSet q_prod(product.product.order());
        for (int u : columns[v]) q_prod.add(product.encode(u, static_cast<int>(v)));
        const VertexSet product_nbhd = closed_neighborhood(product.product, q_prod);
        for (std::size_t i = 0; i < k; ++i) {
            bool in_product = true;
            for (int u : partition.blocks[i])
                if (!product_nbhd.contains(product.encode(u, static_cast<int>(v)))) {
                    in_product = false;
                    break;
                }
            const bool in_factor = partition.blocks[i].is_subset_of(factor_nbhd);
            if (in_product != in_factor) out.factor_product_agree = false;
            member[i][v] = in_product;
        }
    }

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t v = 0; v < nh; ++v)
            if (member[i][v]) out.pairs.emplace_back(static_cast<int>(i), static_cast<int>(v));
    out.n_count = static_cast<long long>(out.pairs.size());

    // Row and column fibers tallied independently of the pair list.
    long long row_total = 0, col_total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v = 0; v < nh; ++v) out.l_sizes[i] += member[i][v] ? 1 : 0;
        row_total += out.l_sizes[i];
    }
    for (std::size_t v = 0; v < nh; ++v) {
        for (std::size_t i = 0; i < k; ++i) out.r_sizes[v] += member[i][v] ? 1 : 0;
        col_total += out.r_sizes[v];
    }
    out.counting_identity = out.n_count == row_total && out.n_count == col_total;
    return out;
}

LMembershipCheck check_l_membership(const Graph& h, const std::vector<VertexSet>& projections,
                                    const CComputation& c) {
    const std::size_t k = projections.size();
    const std::size_t nh = static_cast<std::size_t>(h.order());
    std::vector<std::vector<bool>> member(k, std::vector<bool>(nh, false));
    for (auto [i, v] : c.pairs)
        if (i >= 0 && static_cast<std::size_t>(i) < k && v >= 0 &&
            static_cast<std::size_t>(v) < nh)
            member[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = true;

    LMembershipCheck out;
    out.holds = true;
    for (std::size_t i = 0; i < k; ++i) {
        const VertexSet undominated = closed_neighborhood(h, projections[i]).complement();
        for (int v : undominated)
            if (!member[i][static_cast<std::size_t>(v)]) {
                out.holds = false;
                out.violations.emplace_back(static_cast<int>(i), v);
            }
    }
    return out;
}

NBoundsCheck check_n_bounds(const Graph& g, const DominatorPartition& partition,
                            const std::vector<VertexSet>& columns,
                            const std::vector<int>& r_sizes,
                            const std::vector<std::pair<int, int>>& c_pairs, long long n_count,
                            int gamma_g, int gamma_h, int v1_size, int v2_size) {
    NBoundsCheck out;
    out.lower_holds =
        n_count >= static_cast<long long>(gamma_g) * gamma_h - v1_size - v2_size;
    out.upper_holds = n_count <= v2_size;

    const std::size_t k = partition.representatives.size();
    const std::size_t nh = columns.size();
    std::vector<std::vector<bool>> member(k, std::vector<bool>(nh, false));
    for (auto [i, v] : c_pairs)
        if (i >= 0 && static_cast<std::size_t>(i) < k && v >= 0 &&
            static_cast<std::size_t>(v) < nh)
            member[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = true;

    out.exchange_holds = true;
    for (std::size_t v = 0; v < nh && !out.defect; ++v) {
        if (r_sizes[v] <= columns[v].count()) continue;
        out.exchange_holds = false;
        // Exchange argument: Q_v plus the representatives of the rows absent
        // from R_v would dominate G with fewer than gamma(G) vertices.
        NBoundsDefect defect;
        defect.column = static_cast<int>(v);
        VertexSet replacement = columns[v];
        for (std::size_t j = 0; j < k; ++j)
            if (!member[j][v]) replacement.add(partition.representatives[j]);
        defect.replacement = replacement.to_vector();
        defect.replacement_dominates = is_dominating(g, replacement);
        if (defect.replacement_dominates && replacement.count() < gamma_g) {
            defect.detail = "column " + std::to_string(v) + ": |R_v| = " +
                            std::to_string(r_sizes[v]) + " > |Q_v| = " +
                            std::to_string(columns[v].count()) +
                            " and the exchange set dominates G with " +
                            std::to_string(replacement.count()) + " < gamma(G) = " +
                            std::to_string(gamma_g) +
                            " vertices; the recorded gamma(G) or trace is corrupt";
        } else {
            defect.detail = "column " + std::to_string(v) + ": |R_v| = " +
                            std::to_string(r_sizes[v]) + " > |Q_v| = " +
                            std::to_string(columns[v].count()) +
                            " but the exchange set does not undercut gamma(G); the recorded "
                            "R_v disagrees with the C criterion";
        }
        out.defect = std::move(defect);
    }
    return out;
}

namespace {

struct TraceBuild {
    SolveStatus status = SolveStatus::solved;
    std::string failed_stage;
    ProofTrace trace;
};

TraceBuild build_trace(const Graph& g, const Graph& h, const LabeledProduct& product,
                       const RomanFunction& f, const DominatorPartition& partition, int gamma_g,
                       int gamma_h, const std::vector<int>& gamma_h_witness, int gamma_r_value,
                       TieBreak tie_break, std::uint64_t seed, const SolverBudget& budget,
                       const std::string& g_label, const std::string& h_label) {
    TraceBuild out;
    ProofTrace& t = out.trace;
    t.g = g;
    t.h = h;
    t.g_label = g_label;
    t.h_label = h_label;
    t.gamma_g = gamma_g;
    t.gamma_h = gamma_h;
    t.gamma_r_product = gamma_r_value;
    t.gamma_h_witness = gamma_h_witness;
    t.f = f;
    t.partition = partition;
    t.tie_break = tie_break;
    t.tie_seed = seed;

    const Graph& prod = product.product;
    const int np = prod.order();
    TraceChecks& c = t.checks;

    c.f_partitions_product = is_partition(f, np);
    c.f_valid_rdf = c.f_partitions_product && f.v0.is_subset_of(open_neighborhood(prod, f.v2));
    const int v1_size = f.v1.count();
    const int v2_size = f.v2.count();
    c.weight_consistency = v1_size + 2 * v2_size == gamma_r_value;
    c.partition_valid = partition_is_valid(g, partition);
    c.d_dominates_product = is_dominating(prod, f.v1 | f.v2);

    // Both readings of the Lemma 2 step, on the product: V_2 dominates
    // G□H - V_1, and |V_2| is the domination number of that subgraph.
    const VertexSet support = f.v0 | f.v2;
    if (support.empty()) {
        c.v2_dominates_v0 = true;
        c.v2_gamma_set_of_induced = true;
        t.lemma2_induced_gamma = -1;
    } else {
        const InducedSubgraph sub = induced_subgraph(prod, support, AllowEmpty::no);
        VertexSet v2_new(sub.graph.order());
        for (int v : f.v2) v2_new.add(sub.old_to_new[static_cast<std::size_t>(v)]);
        c.v2_dominates_v0 = is_dominating(sub.graph, v2_new);
        const GammaResult sub_gamma = gamma_exact(sub.graph, budget);
        if (!sub_gamma.ok()) {
            out.status = sub_gamma.status;
            out.failed_stage = "gamma((GxH)[V0+V2])";
            return out;
        }
        t.lemma2_induced_gamma = sub_gamma.value;
        c.v2_gamma_set_of_induced = c.v2_dominates_v0 && v2_size == sub_gamma.value;
    }

    const SliceSet slices = compute_slices(f, partition, product);
    c.slices_partition_d = slices.partitions_d;

    const std::vector<VertexSet> columns = compute_columns(f, product);
    int column_total = 0;
    for (const auto& q : columns) column_total += q.count();
    c.columns_partition_v2 = column_total == v2_size;

    const CComputation cc = compute_c(g, partition, columns, product);
    c.counting_identity = cc.counting_identity;
    c.c_criterion_equivalence = cc.factor_product_agree;
    t.c_pairs = cc.pairs;
    t.n_count = cc.n_count;

    c.projection_dominating = true;
    c.projection_bound = true;
    t.blocks.resize(partition.blocks.size());
    for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
        BlockTrace& b = t.blocks[i];
        b.d = slices.d_blocks[i];
        b.projection = slices.projections[i];
        const ProjectionBoundCheck pb = check_projection_bound(h, b.projection, gamma_h);
        b.undominated = pb.undominated_count;
        b.l_size = cc.l_sizes[i];
        c.projection_dominating = c.projection_dominating && pb.union_dominates;
        c.projection_bound = c.projection_bound && pb.bound_holds;
    }

    t.columns.resize(columns.size());
    for (std::size_t v = 0; v < columns.size(); ++v) {
        t.columns[v].q = columns[v];
        t.columns[v].r_size = cc.r_sizes[v];
    }

    c.l_membership = check_l_membership(h, slices.projections, cc).holds;

    const NBoundsCheck nb = check_n_bounds(g, partition, columns, cc.r_sizes, cc.pairs,
                                           cc.n_count, gamma_g, gamma_h, v1_size, v2_size);
    c.exchange_bound = nb.exchange_holds;
    c.n_lower_bound = nb.lower_holds;
    c.n_upper_bound = nb.upper_holds;

    const long long gg = static_cast<long long>(gamma_g) * gamma_h;
    c.final_chain = gg <= t.n_count + v1_size + v2_size &&
                    t.n_count + v1_size + v2_size <= v1_size + 2 * v2_size &&
                    v1_size + 2 * v2_size == gamma_r_value;
    return out;
}

AuditOutcome audit_common(const Graph& g, const Graph& h, const RomanFunction* given_f,
                          bool require_optimal, const SolverBudget& budget, TieBreak tie_break,
                          std::uint64_t seed, const std::string& g_label,
                          const std::string& h_label) {
    AuditOutcome out;
    out.report.g_label = g_label;
    out.report.h_label = h_label;
    out.report.g_graph6 = write_graph6(g);
    out.report.h_graph6 = write_graph6(h);
    out.report.g_order = g.order();
    out.report.h_order = h.order();

    const GammaResult rg = gamma_exact(g, budget);
    out.nodes_total += rg.nodes_explored;
    if (!rg.ok()) {
        out.status = rg.status;
        out.failed_stage = "gamma(G)";
        return out;
    }
    const GammaResult rh = gamma_exact(h, budget);
    out.nodes_total += rh.nodes_explored;
    if (!rh.ok()) {
        out.status = rh.status;
        out.failed_stage = "gamma(H)";
        return out;
    }

    LabeledProduct product;
    try {
        product = cartesian_product(g, h, budget.max_order);
    } catch (const InstanceTooLarge&) {
        out.status = SolveStatus::order_exceeded;
        out.failed_stage = "product";
        return out;
    }
    out.report.product_order = product.product.order();

    const GammaResult rp = gamma_exact(product.product, budget);
    out.nodes_total += rp.nodes_explored;
    if (!rp.ok()) {
        out.status = rp.status;
        out.failed_stage = "gamma(GxH)";
        return out;
    }
    const RomanResult rr = gamma_roman_exact(product.product, budget);
    out.nodes_total += rr.nodes_explored;
    if (!rr.ok()) {
        out.status = rr.status;
        out.failed_stage = "gammaR(GxH)";
        return out;
    }

    RomanFunction f = rr.witness;
    if (given_f) {
        if (!is_rdf(product.product, *given_f))
            throw std::invalid_argument("audit: supplied f is not a valid RDF on the product");
        if (require_optimal && roman_weight(*given_f) != rr.value)
            throw std::invalid_argument(
                "audit: supplied f has weight " + std::to_string(roman_weight(*given_f)) +
                ", not the optimum " + std::to_string(rr.value) +
                " (pass require_optimal = false to experiment)");
        f = *given_f;
    }

    const DominatorPartition partition =
        build_partition(g, rg.witness.to_vector(), rg.value, tie_break, seed);

    TraceBuild tb = build_trace(g, h, product, f, partition, rg.value, rh.value,
                                rh.witness.to_vector(), rr.value, tie_break, seed, budget,
                                g_label, h_label);
    if (tb.status != SolveStatus::solved) {
        out.status = tb.status;
        out.failed_stage = tb.failed_stage;
        return out;
    }
    out.trace = std::move(tb.trace);

    AuditReport& rep = out.report;
    rep.gamma_g = rg.value;
    rep.gamma_h = rh.value;
    rep.gamma_product = rp.value;
    rep.gamma_r_product = rr.value;
    rep.gamma_gamma = rg.value * rh.value;
    rep.two_gamma_product = 2 * rp.value;
    rep.gap = rr.value - rep.gamma_gamma;
    rep.theorem2 = rep.gamma_gamma <= rr.value;
    rep.theorem1 = rep.gamma_gamma <= 2 * rp.value;
    rep.lemma1_product = rp.value <= rr.value && rr.value <= 2 * rp.value;
    rep.checks_all = out.trace.checks.all();
    return out;
}

}  // namespace

AuditOutcome audit_pair(const Graph& g, const Graph& h, const SolverBudget& budget,
                        TieBreak tie_break, std::uint64_t seed, const std::string& g_label,
                        const std::string& h_label) {
    return audit_common(g, h, nullptr, true, budget, tie_break, seed, g_label, h_label);
}

AuditOutcome audit_pair_with_rdf(const Graph& g, const Graph& h, const RomanFunction& f,
                                 bool require_optimal, const SolverBudget& budget,
                                 TieBreak tie_break, std::uint64_t seed,
                                 const std::string& g_label, const std::string& h_label) {
    return audit_common(g, h, &f, require_optimal, budget, tie_break, seed, g_label, h_label);
}

RemarkVerdict check_remark(const SolverBudget& budget) {
    RemarkVerdict out;
    const Graph k2 = complete_graph(2);
    out.gamma_r_k2 = gamma_roman_exact(k2, budget).value;
    const LabeledProduct product = cartesian_product(k2, k2, budget.max_order);
    out.gamma_r_product = gamma_roman_exact(product.product, budget).value;
    out.gamma_product = gamma_exact(product.product, budget).value;
    out.analogue_fails = out.gamma_r_k2 * out.gamma_r_k2 > out.gamma_r_product;
    out.sanity_lower = out.gamma_r_product >= out.gamma_product;
    out.sanity_upper = out.gamma_r_product <= 2 * out.gamma_product;
    return out;
}

}  // namespace domviz
