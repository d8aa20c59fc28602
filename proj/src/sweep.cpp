#include "domviz/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace domviz {

const char* to_string(PairRule rule) {
    switch (rule) {
        case PairRule::all_pairs: return "all-pairs";
        case PairRule::zipped: return "zipped";
        case PairRule::self_pairs: return "self-pairs";
    }
    return "unknown";
}

PairRule pair_rule_from_string(const std::string& name) {
    if (name == "all-pairs") return PairRule::all_pairs;
    if (name == "zipped") return PairRule::zipped;
    if (name == "self-pairs") return PairRule::self_pairs;
    throw std::invalid_argument("unknown pair rule \"" + name + "\"");
}

namespace {

ReportRow audit_one(const GraphSource& gs, const GraphSource& hs, const SweepConfig& cfg) {
    ReportRow row;
    row.g_label = gs.label;
    row.h_label = hs.label;
    const auto start = std::chrono::steady_clock::now();
    try {
        const AuditOutcome outcome = audit_pair(gs.graph, hs.graph, cfg.budget, cfg.tie_break,
                                                cfg.tie_seed, gs.label, hs.label);
        row.status = to_string(outcome.status);
        row.failed_stage = outcome.failed_stage;
        row.nodes = outcome.nodes_total;
        if (outcome.ok()) {
            const AuditReport& r = outcome.report;
            row.gamma_g = r.gamma_g;
            row.gamma_h = r.gamma_h;
            row.gamma_product = r.gamma_product;
            row.gamma_r_product = r.gamma_r_product;
            row.gamma_gamma = r.gamma_gamma;
            row.two_gamma_product = r.two_gamma_product;
            row.gap = r.gap;
            row.theorem2 = r.theorem2;
            row.theorem1 = r.theorem1;
            row.lemma1_product = r.lemma1_product;
            row.checks_all = r.checks_all;
            row.defect = !outcome.all_verdicts();
        }
    } catch (const std::exception& e) {
        row.status = "error";
        row.failed_stage = e.what();
        row.defect = true;
    }
    if (cfg.record_times) {
        const auto stop = std::chrono::steady_clock::now();
        row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return row;
}

}  // namespace

SweepResult run_sweep(const std::vector<GraphSource>& g_sources,
                      const std::vector<GraphSource>& h_sources, const SweepConfig& config) {
    std::vector<std::pair<std::size_t, std::size_t>> items;
    switch (config.rule) {
        case PairRule::all_pairs:
            for (std::size_t i = 0; i < g_sources.size(); ++i)
                for (std::size_t j = 0; j < h_sources.size(); ++j) items.emplace_back(i, j);
            break;
        case PairRule::zipped:
            if (g_sources.size() != h_sources.size())
                throw std::invalid_argument(
                    "zipped sweep needs equally long source lists, got " +
                    std::to_string(g_sources.size()) + " and " +
                    std::to_string(h_sources.size()));
            for (std::size_t i = 0; i < g_sources.size(); ++i) items.emplace_back(i, i);
            break;
        case PairRule::self_pairs:
            for (std::size_t i = 0; i < g_sources.size(); ++i) items.emplace_back(i, i);
            break;
    }

    SweepResult result;
    result.rows.resize(items.size());
    const int jobs = std::max(1, config.jobs);

    // Deterministic result order: each worker writes to its item's slot.
    const auto& h_list = config.rule == PairRule::self_pairs ? g_sources : h_sources;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= items.size()) return;
            const auto [i, j] = items[idx];
            result.rows[idx] = audit_one(g_sources[i], h_list[j], config);
        }
    };
    if (jobs == 1 || items.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int spawn = static_cast<int>(
            std::min(static_cast<std::size_t>(jobs), items.size()));
        pool.reserve(static_cast<std::size_t>(spawn));
        for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    SweepSummary& s = result.summary;
    s.pairs = static_cast<long long>(result.rows.size());
    std::vector<int> gaps;
    for (const ReportRow& row : result.rows) {
        if (row.status == "solved") {
            ++s.solved;
            gaps.push_back(row.gap);
            if (row.gap == 0) ++s.tight_count;
            if (row.gamma_r_product < row.two_gamma_product) ++s.theorem2_strictly_better;
            if (row.defect) ++s.defects;
        } else if (row.status == "error") {
            ++s.defects;
        } else {
            ++s.budget_failures;
        }
    }
    if (!gaps.empty()) {
        std::sort(gaps.begin(), gaps.end());
        s.min_gap = gaps.front();
        s.max_gap = gaps.back();
        const std::size_t mid = gaps.size() / 2;
        s.median_gap = gaps.size() % 2 == 1
                           ? gaps[mid]
                           : (gaps[mid - 1] + gaps[mid]) / 2.0;
    }
    s.all_pass = s.defects == 0 && s.budget_failures == 0 && s.solved == s.pairs;
    return result;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string int_cell(int value, bool meaningful) {
    return meaningful ? std::to_string(value) : std::string();
}

const char* bool_cell(bool value) { return value ? "true" : "false"; }

}  // namespace

std::string rows_to_csv(const std::vector<ReportRow>& rows, bool include_times) {
    std::ostringstream out;
    out << "g_label,h_label,status,failed_stage,gamma_g,gamma_h,gamma_product,"
           "gamma_r_product,gamma_gamma,two_gamma_product,gap,theorem2,theorem1,"
           "lemma1_product,checks_all,defect,nodes,millis\n";
    for (const ReportRow& row : rows) {
        const bool solved = row.status == "solved";
        out << csv_escape(row.g_label) << ',' << csv_escape(row.h_label) << ',' << row.status
            << ',' << csv_escape(row.failed_stage) << ',' << int_cell(row.gamma_g, solved)
            << ',' << int_cell(row.gamma_h, solved) << ','
            << int_cell(row.gamma_product, solved) << ','
            << int_cell(row.gamma_r_product, solved) << ','
            << int_cell(row.gamma_gamma, solved) << ','
            << int_cell(row.two_gamma_product, solved) << ',' << int_cell(row.gap, solved)
            << ',';
        if (solved)
            out << bool_cell(row.theorem2) << ',' << bool_cell(row.theorem1) << ','
                << bool_cell(row.lemma1_product) << ',' << bool_cell(row.checks_all) << ','
                << bool_cell(row.defect) << ',';
        else
            out << ",,,," << bool_cell(row.defect) << ',';
        out << row.nodes << ',';
        if (include_times) out << row.millis;
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json summary_to_json(const SweepSummary& s) {
    nlohmann::ordered_json j;
    j["schema"] = "domviz.sweep-summary/1";
    j["pairs"] = s.pairs;
    j["solved"] = s.solved;
    j["budget_failures"] = s.budget_failures;
    j["defects"] = s.defects;
    j["tight_count"] = s.tight_count;
    j["theorem2_strictly_better"] = s.theorem2_strictly_better;
    j["min_gap"] = s.min_gap;
    j["max_gap"] = s.max_gap;
    j["median_gap"] = s.median_gap;
    j["all_pass"] = s.all_pass;
    return j;
}

}  // namespace domviz
