#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "domviz/audit.hpp"
#include "domviz/sources.hpp"

namespace domviz {

// How the G and H source lists combine into audited pairs.
enum class PairRule { all_pairs, zipped, self_pairs };

const char* to_string(PairRule rule);
PairRule pair_rule_from_string(const std::string& name);

struct SweepConfig {
    PairRule rule = PairRule::all_pairs;
    SolverBudget budget;
    TieBreak tie_break = TieBreak::smallest_index;
    std::uint64_t tie_seed = 0;
    int jobs = 1;
    bool record_times = true;  // wall-clock is reported but never part of the
                               // determinism guarantee; disable for byte-stable output
};

// One audited pair. Numeric fields are meaningful only when status ==
// "solved"; a budget failure is recorded in-row and does not abort the sweep.
struct ReportRow {
    std::string g_label, h_label;
    std::string status;        // solved | budget-exceeded | order-exceeded | error
    std::string failed_stage;  // empty when solved
    int gamma_g = -1, gamma_h = -1, gamma_product = -1, gamma_r_product = -1;
    int gamma_gamma = -1, two_gamma_product = -1, gap = 0;
    bool theorem2 = false, theorem1 = false, lemma1_product = false, checks_all = false;
    bool defect = false;  // solved but some verdict came back false
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

struct SweepSummary {
    long long pairs = 0;
    long long solved = 0;
    long long budget_failures = 0;
    long long defects = 0;
    long long tight_count = 0;  // solved rows with gap == 0
    long long theorem2_strictly_better = 0;  // gamma_R(GxH) < 2 gamma(GxH)
    int min_gap = 0;            // over solved rows; 0 when none solved
    int max_gap = 0;
    double median_gap = 0.0;
    bool all_pass = false;      // every pair solved with all verdicts true
};

struct SweepResult {
    std::vector<ReportRow> rows;
    SweepSummary summary;
};

// Audits every pair produced by the rule. Work items run on `jobs` threads;
// row order is the deterministic pair order regardless of parallelism.
// Throws std::invalid_argument for zipped lists of different lengths.
SweepResult run_sweep(const std::vector<GraphSource>& g_sources,
                      const std::vector<GraphSource>& h_sources, const SweepConfig& config);

// Fixed column set, RFC-4180-style quoting. Times are blanked (column kept)
// when include_times is false.
std::string rows_to_csv(const std::vector<ReportRow>& rows, bool include_times);

// Schema tag "domviz.sweep-summary/1"; contains no wall-clock fields.
nlohmann::ordered_json summary_to_json(const SweepSummary& summary);

}  // namespace domviz
