#include "domviz/trace_io.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "domviz/graph6.hpp"
#include "domviz/product.hpp"

namespace domviz {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kSchema = "domviz.trace/1";

ordered_json set_to_ints(const VertexSet& s) {
    ordered_json a = ordered_json::array();
    for (int v : s) a.push_back(v);
    return a;
}

ordered_json set_to_pairs(const VertexSet& s, const LabeledProduct& product) {
    ordered_json a = ordered_json::array();
    for (int id : s) {
        const auto [u, v] = product.decode(id);
        a.push_back(ordered_json::array({u, v}));
    }
    return a;
}

// --- strict readers -------------------------------------------------------

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw TraceParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

void expect_keys(const json& j, std::initializer_list<const char*> keys, const char* where) {
    if (!j.is_object())
        throw TraceParseError(std::string(where) + ": expected a JSON object");
    std::set<std::string> allowed;
    for (const char* k : keys) allowed.insert(k);
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            throw TraceParseError(std::string(where) + ": unknown field \"" + key + "\"");
}

int read_int(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw TraceParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

long long read_long(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw TraceParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<long long>();
}

std::string read_string(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string())
        throw TraceParseError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

bool read_bool(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_boolean())
        throw TraceParseError(std::string("field \"") + key + "\" must be a boolean");
    return v.get<bool>();
}

std::vector<int> read_sorted_ints(const json& a, int universe, const std::string& where) {
    if (!a.is_array()) throw TraceParseError(where + ": expected an array");
    std::vector<int> out;
    int prev = -1;
    for (const json& e : a) {
        if (!e.is_number_integer()) throw TraceParseError(where + ": expected integers");
        const int v = e.get<int>();
        if (v < 0 || v >= universe)
            throw TraceParseError(where + ": vertex " + std::to_string(v) +
                                  " outside [0, " + std::to_string(universe) + ")");
        if (v <= prev) throw TraceParseError(where + ": not strictly increasing");
        prev = v;
        out.push_back(v);
    }
    return out;
}

VertexSet ints_to_set(const json& a, int universe, const std::string& where) {
    VertexSet s(universe);
    for (int v : read_sorted_ints(a, universe, where)) s.add(v);
    return s;
}

VertexSet pairs_to_set(const json& a, const LabeledProduct& product, const std::string& where) {
    if (!a.is_array()) throw TraceParseError(where + ": expected an array");
    VertexSet s(product.product.order());
    int prev = -1;
    for (const json& e : a) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw TraceParseError(where + ": expected [u, v] pairs");
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u < 0 || u >= product.g_order || v < 0 || v >= product.h_order)
            throw TraceParseError(where + ": coordinate out of range");
        const int id = product.encode(u, v);
        if (id <= prev) throw TraceParseError(where + ": not sorted by product id");
        prev = id;
        s.add(id);
    }
    return s;
}

void append_failure(std::vector<std::string>& failures, bool ok, const std::string& line) {
    if (!ok) failures.push_back(line);
}

}  // namespace

ordered_json trace_to_json(const ProofTrace& t) {
    const LabeledProduct product =
        cartesian_product(t.g, t.h, t.g.order() * t.h.order());

    ordered_json j;
    j["schema"] = kSchema;
    j["g"] = {{"label", t.g_label}, {"graph6", write_graph6(t.g)}};
    j["h"] = {{"label", t.h_label}, {"graph6", write_graph6(t.h)}};
    j["gamma_g"] = t.gamma_g;
    j["gamma_h"] = t.gamma_h;
    j["gamma_r_product"] = t.gamma_r_product;
    j["lemma2_induced_gamma"] = t.lemma2_induced_gamma;
    j["gamma_h_witness"] = t.gamma_h_witness;

    ordered_json f;
    f["v0"] = set_to_pairs(t.f.v0, product);
    f["v1"] = set_to_pairs(t.f.v1, product);
    f["v2"] = set_to_pairs(t.f.v2, product);
    j["f"] = std::move(f);

    ordered_json part;
    part["tie_break"] = to_string(t.tie_break);
    part["tie_seed"] = t.tie_seed;
    part["representatives"] = t.partition.representatives;
    ordered_json blocks = ordered_json::array();
    for (const VertexSet& b : t.partition.blocks) blocks.push_back(set_to_ints(b));
    part["blocks"] = std::move(blocks);
    j["partition"] = std::move(part);

    ordered_json per_block = ordered_json::array();
    for (const BlockTrace& b : t.blocks) {
        ordered_json e;
        e["d"] = set_to_pairs(b.d, product);
        e["projection"] = set_to_ints(b.projection);
        e["undominated"] = b.undominated;
        e["l_size"] = b.l_size;
        per_block.push_back(std::move(e));
    }
    j["blocks"] = std::move(per_block);

    ordered_json per_column = ordered_json::array();
    for (const ColumnTrace& c : t.columns) {
        ordered_json e;
        e["q"] = set_to_ints(c.q);
        e["r_size"] = c.r_size;
        per_column.push_back(std::move(e));
    }
    j["columns"] = std::move(per_column);

    ordered_json c_pairs = ordered_json::array();
    for (auto [i, v] : t.c_pairs) c_pairs.push_back(ordered_json::array({i, v}));
    j["c_pairs"] = std::move(c_pairs);
    j["n_count"] = t.n_count;

    ordered_json checks;
    const TraceChecks& c = t.checks;
    checks["f_partitions_product"] = c.f_partitions_product;
    checks["f_valid_rdf"] = c.f_valid_rdf;
    checks["weight_consistency"] = c.weight_consistency;
    checks["partition_valid"] = c.partition_valid;
    checks["d_dominates_product"] = c.d_dominates_product;
    checks["v2_dominates_v0"] = c.v2_dominates_v0;
    checks["v2_gamma_set_of_induced"] = c.v2_gamma_set_of_induced;
    checks["slices_partition_d"] = c.slices_partition_d;
    checks["columns_partition_v2"] = c.columns_partition_v2;
    checks["projection_dominating"] = c.projection_dominating;
    checks["projection_bound"] = c.projection_bound;
    checks["l_membership"] = c.l_membership;
    checks["counting_identity"] = c.counting_identity;
    checks["c_criterion_equivalence"] = c.c_criterion_equivalence;
    checks["exchange_bound"] = c.exchange_bound;
    checks["n_lower_bound"] = c.n_lower_bound;
    checks["n_upper_bound"] = c.n_upper_bound;
    checks["final_chain"] = c.final_chain;
    j["checks"] = std::move(checks);
    return j;
}

ProofTrace trace_from_json(const json& j) {
    expect_keys(j,
                {"schema", "g", "h", "gamma_g", "gamma_h", "gamma_r_product",
                 "lemma2_induced_gamma", "gamma_h_witness", "f", "partition", "blocks",
                 "columns", "c_pairs", "n_count", "checks"},
                "trace");
    if (read_string(j, "schema") != kSchema)
        throw TraceParseError("unsupported schema \"" + read_string(j, "schema") + "\"");

    ProofTrace t;
    const json& jg = field(j, "g");
    const json& jh = field(j, "h");
    expect_keys(jg, {"label", "graph6"}, "g");
    expect_keys(jh, {"label", "graph6"}, "h");
    t.g_label = read_string(jg, "label");
    t.h_label = read_string(jh, "label");
    try {
        t.g = parse_graph6(read_string(jg, "graph6"));
        t.h = parse_graph6(read_string(jh, "graph6"));
    } catch (const std::exception& e) {
        throw TraceParseError(std::string("bad graph6: ") + e.what());
    }

    LabeledProduct product;
    try {
        product = cartesian_product(t.g, t.h, t.g.order() * t.h.order());
    } catch (const std::exception& e) {
        throw TraceParseError(std::string("cannot rebuild product: ") + e.what());
    }

    t.gamma_g = read_int(j, "gamma_g");
    t.gamma_h = read_int(j, "gamma_h");
    t.gamma_r_product = read_int(j, "gamma_r_product");
    t.lemma2_induced_gamma = read_int(j, "lemma2_induced_gamma");
    t.gamma_h_witness =
        read_sorted_ints(field(j, "gamma_h_witness"), t.h.order(), "gamma_h_witness");

    const json& jf = field(j, "f");
    expect_keys(jf, {"v0", "v1", "v2"}, "f");
    t.f.v0 = pairs_to_set(field(jf, "v0"), product, "f.v0");
    t.f.v1 = pairs_to_set(field(jf, "v1"), product, "f.v1");
    t.f.v2 = pairs_to_set(field(jf, "v2"), product, "f.v2");

    const json& jp = field(j, "partition");
    expect_keys(jp, {"tie_break", "tie_seed", "representatives", "blocks"}, "partition");
    try {
        t.tie_break = tie_break_from_string(read_string(jp, "tie_break"));
    } catch (const std::invalid_argument& e) {
        throw TraceParseError(e.what());
    }
    {
        const json& seed = field(jp, "tie_seed");
        if (!seed.is_number_integer() && !seed.is_number_unsigned())
            throw TraceParseError("partition.tie_seed must be an integer");
        t.tie_seed = seed.get<std::uint64_t>();
    }
    const json& reps = field(jp, "representatives");
    if (!reps.is_array()) throw TraceParseError("partition.representatives: expected an array");
    for (const json& e : reps) {
        if (!e.is_number_integer())
            throw TraceParseError("partition.representatives: expected integers");
        const int u = e.get<int>();
        if (u < 0 || u >= t.g.order())
            throw TraceParseError("partition.representatives: vertex out of range");
        t.partition.representatives.push_back(u);
    }
    const json& jblocks = field(jp, "blocks");
    if (!jblocks.is_array()) throw TraceParseError("partition.blocks: expected an array");
    for (std::size_t i = 0; i < jblocks.size(); ++i)
        t.partition.blocks.push_back(ints_to_set(
            jblocks[i], t.g.order(), "partition.blocks[" + std::to_string(i) + "]"));
    if (t.partition.blocks.size() != t.partition.representatives.size())
        throw TraceParseError("partition: representative/block count mismatch");

    const json& jper = field(j, "blocks");
    if (!jper.is_array()) throw TraceParseError("blocks: expected an array");
    for (std::size_t i = 0; i < jper.size(); ++i) {
        const json& e = jper[i];
        const std::string where = "blocks[" + std::to_string(i) + "]";
        expect_keys(e, {"d", "projection", "undominated", "l_size"}, where.c_str());
        BlockTrace b;
        b.d = pairs_to_set(field(e, "d"), product, where + ".d");
        b.projection = ints_to_set(field(e, "projection"), t.h.order(), where + ".projection");
        b.undominated = read_int(e, "undominated");
        b.l_size = read_int(e, "l_size");
        t.blocks.push_back(std::move(b));
    }
    if (t.blocks.size() != t.partition.blocks.size())
        throw TraceParseError("blocks: expected one entry per partition block");

    const json& jcols = field(j, "columns");
    if (!jcols.is_array()) throw TraceParseError("columns: expected an array");
    for (std::size_t v = 0; v < jcols.size(); ++v) {
        const json& e = jcols[v];
        const std::string where = "columns[" + std::to_string(v) + "]";
        expect_keys(e, {"q", "r_size"}, where.c_str());
        ColumnTrace c;
        c.q = ints_to_set(field(e, "q"), t.g.order(), where + ".q");
        c.r_size = read_int(e, "r_size");
        t.columns.push_back(std::move(c));
    }
    if (static_cast<int>(t.columns.size()) != t.h.order())
        throw TraceParseError("columns: expected one entry per vertex of H");

    const json& jc = field(j, "c_pairs");
    if (!jc.is_array()) throw TraceParseError("c_pairs: expected an array");
    std::pair<int, int> prev{-1, -1};
    for (const json& e : jc) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw TraceParseError("c_pairs: expected [i, v] pairs");
        const std::pair<int, int> p{e[0].get<int>(), e[1].get<int>()};
        if (p.first < 0 || p.first >= static_cast<int>(t.partition.blocks.size()) ||
            p.second < 0 || p.second >= t.h.order())
            throw TraceParseError("c_pairs: index out of range");
        if (!(prev < p)) throw TraceParseError("c_pairs: not lexicographically sorted");
        prev = p;
        t.c_pairs.push_back(p);
    }
    t.n_count = read_long(j, "n_count");

    const json& jchecks = field(j, "checks");
    expect_keys(jchecks,
                {"f_partitions_product", "f_valid_rdf", "weight_consistency", "partition_valid",
                 "d_dominates_product", "v2_dominates_v0", "v2_gamma_set_of_induced",
                 "slices_partition_d", "columns_partition_v2", "projection_dominating",
                 "projection_bound", "l_membership", "counting_identity",
                 "c_criterion_equivalence", "exchange_bound", "n_lower_bound", "n_upper_bound",
                 "final_chain"},
                "checks");
    TraceChecks& c = t.checks;
    c.f_partitions_product = read_bool(jchecks, "f_partitions_product");
    c.f_valid_rdf = read_bool(jchecks, "f_valid_rdf");
    c.weight_consistency = read_bool(jchecks, "weight_consistency");
    c.partition_valid = read_bool(jchecks, "partition_valid");
    c.d_dominates_product = read_bool(jchecks, "d_dominates_product");
    c.v2_dominates_v0 = read_bool(jchecks, "v2_dominates_v0");
    c.v2_gamma_set_of_induced = read_bool(jchecks, "v2_gamma_set_of_induced");
    c.slices_partition_d = read_bool(jchecks, "slices_partition_d");
    c.columns_partition_v2 = read_bool(jchecks, "columns_partition_v2");
    c.projection_dominating = read_bool(jchecks, "projection_dominating");
    c.projection_bound = read_bool(jchecks, "projection_bound");
    c.l_membership = read_bool(jchecks, "l_membership");
    c.counting_identity = read_bool(jchecks, "counting_identity");
    c.c_criterion_equivalence = read_bool(jchecks, "c_criterion_equivalence");
    c.exchange_bound = read_bool(jchecks, "exchange_bound");
    c.n_lower_bound = read_bool(jchecks, "n_lower_bound");
    c.n_upper_bound = read_bool(jchecks, "n_upper_bound");
    c.final_chain = read_bool(jchecks, "final_chain");
    return t;
}

VerifyResult verify_trace(const ProofTrace& t) {
    VerifyResult out;
    TraceChecks& c = out.checks;
    auto fail = [&out](bool ok, const std::string& line) { append_failure(out.failures, ok, line); };

    const LabeledProduct product =
        cartesian_product(t.g, t.h, t.g.order() * t.h.order());
    const Graph& prod = product.product;
    const int np = prod.order();
    const int v1_size = t.f.v1.count();
    const int v2_size = t.f.v2.count();
    const std::size_t k = t.partition.blocks.size();

    if (t.partition.representatives.size() != k || t.blocks.size() != k ||
        static_cast<int>(t.columns.size()) != t.h.order()) {
        out.failures.push_back("trace arrays inconsistent with the partition/H sizes");
        return out;
    }

    // Structure of f and the partition.
    c.f_partitions_product = is_partition(t.f, np);
    fail(c.f_partitions_product, "f does not partition V(GxH)");
    c.f_valid_rdf =
        c.f_partitions_product && t.f.v0.is_subset_of(open_neighborhood(prod, t.f.v2));
    fail(c.f_valid_rdf, "f is not a valid Roman dominating function");
    c.weight_consistency = v1_size + 2 * v2_size == t.gamma_r_product;
    fail(c.weight_consistency, "weight |V_1| + 2|V_2| != recorded gamma_R(GxH)");
    c.partition_valid = partition_is_valid(t.g, t.partition) &&
                        static_cast<int>(k) == t.gamma_g;
    fail(c.partition_valid, "dominator partition invalid or not of size gamma(G)");

    // Certificates for the recorded numbers (upper-bound side only; the
    // minimality of gamma_g / gamma_h / gamma_R is a solver fact).
    {
        VertexSet w(t.h.order());
        bool in_range = true;
        for (int v : t.gamma_h_witness) {
            if (v < 0 || v >= t.h.order()) { in_range = false; break; }
            w.add(v);
        }
        const bool cert = in_range && is_dominating(t.h, w) &&
                          static_cast<int>(t.gamma_h_witness.size()) == t.gamma_h;
        fail(cert, "gamma_h_witness is not a dominating set of H of size gamma_h");
    }

    c.d_dominates_product = is_dominating(prod, t.f.v1 | t.f.v2);
    fail(c.d_dominates_product, "D = V_1 + V_2 does not dominate GxH");

    const VertexSet support = t.f.v0 | t.f.v2;
    if (support.empty()) {
        c.v2_dominates_v0 = true;
        c.v2_gamma_set_of_induced = t.lemma2_induced_gamma == -1;
        fail(c.v2_gamma_set_of_induced, "lemma2_induced_gamma should be -1 (vacuous case)");
    } else {
        const InducedSubgraph sub = induced_subgraph(prod, support, AllowEmpty::no);
        VertexSet v2_new(sub.graph.order());
        for (int v : t.f.v2) v2_new.add(sub.old_to_new[static_cast<std::size_t>(v)]);
        c.v2_dominates_v0 = is_dominating(sub.graph, v2_new);
        fail(c.v2_dominates_v0, "V_2 does not dominate (GxH)[V_0 + V_2]");
        c.v2_gamma_set_of_induced = c.v2_dominates_v0 && v2_size == t.lemma2_induced_gamma;
        fail(c.v2_gamma_set_of_induced,
             "|V_2| != recorded gamma((GxH)[V_0 + V_2]) (minimality itself is a solver fact)");
    }

    // Slices: recompute D_i / P_i from f + partition and compare.
    const SliceSet slices = compute_slices(t.f, t.partition, product);
    c.slices_partition_d = slices.partitions_d;
    for (std::size_t i = 0; i < k && i < t.blocks.size(); ++i) {
        if (!(slices.d_blocks[i] == t.blocks[i].d)) {
            c.slices_partition_d = false;
            out.failures.push_back("blocks[" + std::to_string(i) +
                                   "].d differs from the recomputed D_i");
        }
        if (!(slices.projections[i] == t.blocks[i].projection)) {
            c.slices_partition_d = false;
            out.failures.push_back("blocks[" + std::to_string(i) +
                                   "].projection differs from the recomputed P_i");
        }
    }
    if (!slices.partitions_d)
        out.failures.push_back("sum |D_i| != |D|: slices do not partition D");

    // Columns: recompute Q_v from f and compare.
    const std::vector<VertexSet> columns = compute_columns(t.f, product);
    c.columns_partition_v2 = true;
    int column_total = 0;
    for (std::size_t v = 0; v < columns.size(); ++v) {
        column_total += t.columns[v].q.count();
        if (!(columns[v] == t.columns[v].q)) {
            c.columns_partition_v2 = false;
            out.failures.push_back("columns[" + std::to_string(v) +
                                   "].q differs from the recomputed Q_v");
        }
    }
    if (column_total != v2_size) {
        c.columns_partition_v2 = false;
        out.failures.push_back("sum |Q_v| != |V_2|");
    }

    // Projections: Eq. (1) on the recorded P_i, with recorded tallies.
    c.projection_dominating = true;
    c.projection_bound = true;
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        const ProjectionBoundCheck pb =
            check_projection_bound(t.h, t.blocks[i].projection, t.gamma_h);
        if (!pb.union_dominates) c.projection_dominating = false;
        if (!pb.bound_holds) c.projection_bound = false;
        if (pb.undominated_count != t.blocks[i].undominated) {
            c.projection_bound = false;
            out.failures.push_back("blocks[" + std::to_string(i) +
                                   "].undominated differs from |V(H) - N_H[P_i]|");
        }
    }
    fail(c.projection_dominating, "P_i + (V(H) - N_H[P_i]) fails to dominate H for some i");
    fail(c.projection_bound, "Eq. (1) |V(H) - N_H[P_i]| >= gamma(H) - |P_i| fails for some i");

    // C: recompute from the *recorded* partition and Q_v sets, then compare
    // the pair list and all three tallies against the recorded numbers.
    std::vector<VertexSet> recorded_q;
    recorded_q.reserve(t.columns.size());
    for (const ColumnTrace& col : t.columns) recorded_q.push_back(col.q);
    const CComputation cc = compute_c(t.g, t.partition, recorded_q, product);
    c.c_criterion_equivalence = cc.factor_product_agree;
    fail(c.c_criterion_equivalence, "product-level and factor-level C tests disagree");

    c.counting_identity = cc.counting_identity && cc.pairs == t.c_pairs &&
                          cc.n_count == t.n_count &&
                          static_cast<long long>(t.c_pairs.size()) == t.n_count;
    for (std::size_t i = 0; i < t.blocks.size(); ++i)
        if (cc.l_sizes[i] != t.blocks[i].l_size) c.counting_identity = false;
    for (std::size_t v = 0; v < t.columns.size(); ++v)
        if (cc.r_sizes[v] != t.columns[v].r_size) c.counting_identity = false;
    fail(c.counting_identity,
         "counting identity broken: recorded C / N / |L_i| / |R_v| disagree with recomputation");

    // L-membership from recorded projections and recorded C.
    std::vector<VertexSet> recorded_p;
    recorded_p.reserve(t.blocks.size());
    for (const BlockTrace& b : t.blocks) recorded_p.push_back(b.projection);
    CComputation recorded_c;
    recorded_c.pairs = t.c_pairs;
    c.l_membership = check_l_membership(t.h, recorded_p, recorded_c).holds;
    fail(c.l_membership, "some (i, v) with v undominated by P_i is missing from C");

    // N bounds from the recorded numbers.
    std::vector<int> recorded_r;
    recorded_r.reserve(t.columns.size());
    for (const ColumnTrace& col : t.columns) recorded_r.push_back(col.r_size);
    const NBoundsCheck nb =
        check_n_bounds(t.g, t.partition, recorded_q, recorded_r, t.c_pairs, t.n_count,
                       t.gamma_g, t.gamma_h, v1_size, v2_size);
    c.exchange_bound = nb.exchange_holds;
    c.n_lower_bound = nb.lower_holds;
    c.n_upper_bound = nb.upper_holds;
    fail(c.exchange_bound,
         nb.defect ? "exchange bound |R_v| <= |Q_v| fails: " + nb.defect->detail
                   : "exchange bound |R_v| <= |Q_v| fails");
    fail(c.n_lower_bound, "N < gamma(G)gamma(H) - |V_1| - |V_2|");
    fail(c.n_upper_bound, "N > |V_2|");

    const long long gg = static_cast<long long>(t.gamma_g) * t.gamma_h;
    c.final_chain = gg <= t.n_count + v1_size + v2_size &&
                    t.n_count + v1_size + v2_size <= v1_size + 2 * v2_size &&
                    v1_size + 2 * v2_size == t.gamma_r_product;
    fail(c.final_chain,
         "final chain gammagamma <= N + |V_1| + |V_2| <= |V_1| + 2|V_2| = gamma_R broken");

    // Recorded verdict bits must agree with what the sets actually say.
    const TraceChecks& r = t.checks;
    auto bit = [&](bool rec, bool calc, const char* name) {
        if (rec != calc)
            out.failures.push_back(std::string("recorded check \"") + name +
                                   "\" disagrees with recomputation");
    };
    bit(r.f_partitions_product, c.f_partitions_product, "f_partitions_product");
    bit(r.f_valid_rdf, c.f_valid_rdf, "f_valid_rdf");
    bit(r.weight_consistency, c.weight_consistency, "weight_consistency");
    bit(r.partition_valid, c.partition_valid, "partition_valid");
    bit(r.d_dominates_product, c.d_dominates_product, "d_dominates_product");
    bit(r.v2_dominates_v0, c.v2_dominates_v0, "v2_dominates_v0");
    bit(r.v2_gamma_set_of_induced, c.v2_gamma_set_of_induced, "v2_gamma_set_of_induced");
    bit(r.slices_partition_d, c.slices_partition_d, "slices_partition_d");
    bit(r.columns_partition_v2, c.columns_partition_v2, "columns_partition_v2");
    bit(r.projection_dominating, c.projection_dominating, "projection_dominating");
    bit(r.projection_bound, c.projection_bound, "projection_bound");
    bit(r.l_membership, c.l_membership, "l_membership");
    bit(r.counting_identity, c.counting_identity, "counting_identity");
    bit(r.c_criterion_equivalence, c.c_criterion_equivalence, "c_criterion_equivalence");
    bit(r.exchange_bound, c.exchange_bound, "exchange_bound");
    bit(r.n_lower_bound, c.n_lower_bound, "n_lower_bound");
    bit(r.n_upper_bound, c.n_upper_bound, "n_upper_bound");
    bit(r.final_chain, c.final_chain, "final_chain");
    return out;
}

VerifyResult verify_trace_json(const json& j) { return verify_trace(trace_from_json(j)); }

}  // namespace domviz
