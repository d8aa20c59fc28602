#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domviz/audit.hpp"
#include "domviz/corpus.hpp"
#include "domviz/families.hpp"
#include "domviz/graph6.hpp"
#include "domviz/oracles.hpp"
#include "domviz/solvers.hpp"
#include "domviz/sources.hpp"
#include "domviz/sweep.hpp"
#include "domviz/trace_io.hpp"

namespace {

using namespace domviz;

// Exit-code contract: 0 all pass, 1 usage/parse, 2 budget, 3 defect (a false
// mathematical verdict or an internal inconsistency).
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBudget = 2;
constexpr int kDefect = 3;

std::string show_set(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

std::string show_set(const VertexSet& s) { return show_set(s.to_vector()); }

void add_budget_options(CLI::App* cmd, SolverBudget& budget) {
    cmd->add_option("--max-nodes", budget.max_nodes,
                    "search-node budget per solve (env DOMVIZ_MAX_NODES)")
        ->envname("DOMVIZ_MAX_NODES");
    cmd->add_option("--max-order", budget.max_order, "largest instance order accepted");
}

bool write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

// --- compute ---------------------------------------------------------------

struct ComputeOpts {
    std::vector<std::string> specs;
    std::string which = "both";
    bool witness = false;
    std::uint64_t seed = 0;
    SolverBudget budget;
};

int run_compute(const ComputeOpts& opt) {
    const std::vector<GraphSource> sources = expand_specs(opt.specs, opt.seed);
    for (const GraphSource& src : sources) {
        std::ostringstream line;
        line << src.label << ": n = " << src.graph.order();
        std::string witness_lines;
        if (opt.which == "gamma" || opt.which == "both") {
            const GammaResult r = gamma_exact(src.graph, opt.budget);
            if (!r.ok()) {
                std::cerr << "domviz: " << to_string(r.status) << " computing gamma("
                          << src.label << ")\n";
                return kBudget;
            }
            line << "  gamma = " << r.value;
            if (opt.witness) witness_lines += "  gamma-set: " + show_set(r.witness) + "\n";
        }
        if (opt.which == "gamma_r" || opt.which == "both") {
            const RomanResult r = gamma_roman_exact(src.graph, opt.budget);
            if (!r.ok()) {
                std::cerr << "domviz: " << to_string(r.status) << " computing gamma_r("
                          << src.label << ")\n";
                return kBudget;
            }
            line << "  gamma_r = " << r.value;
            if (opt.witness)
                witness_lines += "  rdf: V1 = " + show_set(r.witness.v1) +
                                 ", V2 = " + show_set(r.witness.v2) + "\n";
        }
        std::cout << line.str() << "\n" << witness_lines;
    }
    return kOk;
}

// --- audit -----------------------------------------------------------------

struct AuditOpts {
    std::string g_spec, h_spec;
    std::string trace_out;
    std::string tie_break = "smallest-index";
    std::uint64_t tie_seed = 0;
    std::uint64_t seed = 0;
    SolverBudget budget;
};

int run_audit(const AuditOpts& opt) {
    const std::vector<GraphSource> gs = expand_spec(opt.g_spec, opt.seed);
    const std::vector<GraphSource> hs = expand_spec(opt.h_spec, opt.seed + 1);
    if (gs.size() != 1 || hs.size() != 1)
        throw std::invalid_argument("audit needs exactly one graph per side; got " +
                                    std::to_string(gs.size()) + " and " +
                                    std::to_string(hs.size()));

    const AuditOutcome outcome =
        audit_pair(gs[0].graph, hs[0].graph, opt.budget,
                   tie_break_from_string(opt.tie_break), opt.tie_seed, gs[0].label,
                   hs[0].label);
    if (!outcome.ok()) {
        std::cerr << "domviz: " << to_string(outcome.status) << " at stage "
                  << outcome.failed_stage << "\n";
        return kBudget;
    }

    const AuditReport& r = outcome.report;
    std::cout << "G = " << r.g_label << " (n = " << r.g_order << ", graph6 " << r.g_graph6
              << ")\n"
              << "H = " << r.h_label << " (n = " << r.h_order << ", graph6 " << r.h_graph6
              << ")\n"
              << "gamma(G) = " << r.gamma_g << "  gamma(H) = " << r.gamma_h
              << "  gamma(GxH) = " << r.gamma_product << "  gamma_R(GxH) = " << r.gamma_r_product
              << "\n"
              << "theorem2: " << r.gamma_gamma << " <= " << r.gamma_r_product << " "
              << (r.theorem2 ? "PASS" : "FAIL") << "\n"
              << "theorem1: " << r.gamma_gamma << " <= " << r.two_gamma_product << " "
              << (r.theorem1 ? "PASS" : "FAIL") << "\n"
              << "lemma1 on GxH: " << r.gamma_product << " <= " << r.gamma_r_product
              << " <= " << r.two_gamma_product << " " << (r.lemma1_product ? "PASS" : "FAIL")
              << "\n"
              << "proof-trace checks: " << (r.checks_all ? "PASS" : "FAIL")
              << "  (N = " << outcome.trace.n_count << ", gap = " << r.gap << ")\n";

    if (!opt.trace_out.empty()) {
        if (!write_text_file(opt.trace_out, trace_to_json(outcome.trace).dump(2) + "\n")) {
            std::cerr << "domviz: cannot write " << opt.trace_out << "\n";
            return kUsage;
        }
        std::cout << "trace written to " << opt.trace_out << "\n";
    }
    if (!outcome.all_verdicts()) {
        std::cerr << "domviz: DEFECT — a verdict came back false\n";
        return kDefect;
    }
    std::cout << "verdict: PASS\n";
    return kOk;
}

// --- sweep -------------------------------------------------------------------

struct SweepOpts {
    std::vector<std::string> g_specs, h_specs;
    std::string pairs = "all-pairs";
    std::string csv_out, summary_out;
    std::string tie_break = "smallest-index";
    std::uint64_t tie_seed = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool no_times = false;
    SolverBudget budget;
};

int run_sweep_cmd(const SweepOpts& opt) {
    const std::vector<GraphSource> g_sources = expand_specs(opt.g_specs, opt.seed);
    const std::vector<GraphSource> h_sources =
        opt.h_specs.empty() ? g_sources : expand_specs(opt.h_specs, opt.seed + 1);

    SweepConfig config;
    config.rule = pair_rule_from_string(opt.pairs);
    config.budget = opt.budget;
    config.tie_break = tie_break_from_string(opt.tie_break);
    config.tie_seed = opt.tie_seed;
    config.jobs = opt.jobs;
    config.record_times = !opt.no_times;

    const SweepResult result = run_sweep(g_sources, h_sources, config);
    const std::string csv = rows_to_csv(result.rows, config.record_times);
    if (opt.csv_out.empty()) {
        std::cout << csv;
    } else if (!write_text_file(opt.csv_out, csv)) {
        std::cerr << "domviz: cannot write " << opt.csv_out << "\n";
        return kUsage;
    }
    const std::string summary = summary_to_json(result.summary).dump(2) + "\n";
    std::cout << summary;
    if (!opt.summary_out.empty() && !write_text_file(opt.summary_out, summary)) {
        std::cerr << "domviz: cannot write " << opt.summary_out << "\n";
        return kUsage;
    }
    if (result.summary.defects > 0) return kDefect;
    if (result.summary.budget_failures > 0) return kBudget;
    return kOk;
}

// --- oracle-diff -------------------------------------------------------------

struct OracleDiffOpts {
    int max_n = 5;
    bool connected_only = false;
    bool skip_petersen = false;
    SolverBudget budget;
};

int run_oracle_diff(const OracleDiffOpts& opt) {
    long long graphs = 0, mismatches = 0;
    auto diff_one = [&](const Graph& g, const std::string& label) -> int {
        ++graphs;
        const GammaResult rg = gamma_exact(g, opt.budget);
        const RomanResult rr = gamma_roman_exact(g, opt.budget);
        if (!rg.ok() || !rr.ok()) {
            std::cerr << "domviz: budget exceeded on " << label << "\n";
            return kBudget;
        }
        const int oracle_gamma = brute_force_gamma(g);
        const int oracle_roman = brute_force_gamma_roman(g);
        if (rg.value != oracle_gamma || rr.value != oracle_roman) {
            ++mismatches;
            std::cout << "MISMATCH " << label << " (graph6 " << write_graph6(g)
                      << "): solver gamma = " << rg.value << " oracle " << oracle_gamma
                      << ", solver gamma_r = " << rr.value << " oracle " << oracle_roman
                      << "\n";
        }
        return kOk;
    };

    for (int n = 1; n <= opt.max_n; ++n) {
        const std::vector<Graph> corpus = all_graphs_up_to_iso(n, opt.connected_only);
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            const int rc = diff_one(corpus[k], (opt.connected_only ? "connected:" : "all:") +
                                                   std::to_string(n) + "#" + std::to_string(k));
            if (rc != kOk) return rc;
        }
        std::cout << "order " << n << ": " << corpus.size() << " graphs checked\n";
    }
    if (!opt.skip_petersen) {
        const int rc = diff_one(petersen_graph(), "petersen");
        if (rc != kOk) return rc;
        std::cout << "petersen: checked\n";
    }
    std::cout << "oracle-diff: " << mismatches << " mismatches over " << graphs
              << " graphs\n";
    return mismatches == 0 ? kOk : kDefect;
}

// --- verify-trace ------------------------------------------------------------

int run_verify_trace(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "domviz: cannot open " << path << "\n";
        return kUsage;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "domviz: " << path << " is not JSON: " << e.what() << "\n";
        return kUsage;
    }
    const VerifyResult result = verify_trace_json(j);
    if (result.pass()) {
        std::cout << "PASS: every check re-derived true from the recorded sets\n";
        return kOk;
    }
    for (const std::string& line : result.failures) std::cout << "FAIL: " << line << "\n";
    std::cout << "verify-trace: " << result.failures.size() << " failure(s)\n";
    return kDefect;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "domviz — exact gamma / gamma_R computations on small graphs and "
        "machine-checked audits of gamma(G)gamma(H) <= gamma_R(G box H)"};
    app.require_subcommand(1);

    ComputeOpts compute_opts;
    CLI::App* compute = app.add_subcommand("compute", "compute gamma and/or gamma_R");
    compute
        ->add_option("--family,--graph", compute_opts.specs,
                     "graph spec (family, g6:..., or graph6 file); repeatable")
        ->required();
    compute->add_option("--which", compute_opts.which, "gamma | gamma_r | both")
        ->check(CLI::IsMember({"gamma", "gamma_r", "both"}));
    compute->add_flag("--witness", compute_opts.witness, "print certificates");
    compute->add_option("--seed", compute_opts.seed, "default seed for random: specs");
    add_budget_options(compute, compute_opts.budget);

    AuditOpts audit_opts;
    CLI::App* audit =
        app.add_subcommand("audit", "audit one pair: instantiate and check the full proof");
    audit->set_help_flag("--help", "print help");  // frees -h for the right factor
    audit->add_option("--g", audit_opts.g_spec, "left factor spec")->required();
    audit->add_option("--h", audit_opts.h_spec, "right factor spec")->required();
    audit->add_option("--trace-out", audit_opts.trace_out, "write the proof trace JSON here");
    audit
        ->add_option("--tie-break", audit_opts.tie_break,
                     "smallest-index | largest-index | seeded")
        ->check(CLI::IsMember({"smallest-index", "largest-index", "seeded"}));
    audit->add_option("--tie-seed", audit_opts.tie_seed, "seed for --tie-break seeded");
    audit->add_option("--seed", audit_opts.seed, "default seed for random: specs");
    add_budget_options(audit, audit_opts.budget);

    SweepOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "audit a corpus and emit CSV + summary");
    sweep->set_help_flag("--help", "print help");  // frees -h for the right factor
    sweep->add_option("--g", sweep_opts.g_specs, "left source specs; repeatable")->required();
    sweep->add_option("--h", sweep_opts.h_specs,
                      "right source specs; defaults to the left list");
    sweep
        ->add_option("--pairs", sweep_opts.pairs, "all-pairs | zipped | self-pairs")
        ->check(CLI::IsMember({"all-pairs", "zipped", "self-pairs"}));
    sweep->add_option("--csv-out", sweep_opts.csv_out, "write rows here (default stdout)");
    sweep->add_option("--summary-out", sweep_opts.summary_out, "also write summary JSON here");
    sweep->add_option("--jobs", sweep_opts.jobs, "worker threads")
        ->check(CLI::Range(1, 512));
    sweep->add_flag("--no-times", sweep_opts.no_times,
                    "blank wall-clock columns for byte-stable output");
    sweep
        ->add_option("--tie-break", sweep_opts.tie_break,
                     "smallest-index | largest-index | seeded")
        ->check(CLI::IsMember({"smallest-index", "largest-index", "seeded"}));
    sweep->add_option("--tie-seed", sweep_opts.tie_seed, "seed for --tie-break seeded");
    sweep->add_option("--seed", sweep_opts.seed, "default seed for random: specs");
    add_budget_options(sweep, sweep_opts.budget);

    OracleDiffOpts oracle_opts;
    CLI::App* oracle =
        app.add_subcommand("oracle-diff", "branch-and-bound vs brute force on a corpus");
    oracle->add_option("--max-n", oracle_opts.max_n, "corpus orders 1..N (N <= 6)")
        ->check(CLI::Range(1, 6));
    oracle->add_flag("--connected-only", oracle_opts.connected_only,
                     "restrict the corpus to connected graphs");
    oracle->add_flag("--no-petersen", oracle_opts.skip_petersen,
                     "skip the Petersen spot check");
    add_budget_options(oracle, oracle_opts.budget);

    std::string trace_path;
    CLI::App* verify =
        app.add_subcommand("verify-trace", "re-derive every verdict of a serialized trace");
    verify->add_option("trace", trace_path, "proof trace JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "domviz: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*compute) return run_compute(compute_opts);
        if (*audit) return run_audit(audit_opts);
        if (*sweep) return run_sweep_cmd(sweep_opts);
        if (*oracle) return run_oracle_diff(oracle_opts);
        if (*verify) return run_verify_trace(trace_path);
    } catch (const TraceParseError& e) {
        std::cerr << "domviz: " << e.what() << "\n";
        return kUsage;
    } catch (const InstanceTooLarge& e) {
        std::cerr << "domviz: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domviz: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "domviz: internal error: " << e.what() << "\n";
        return kDefect;
    }
    return kUsage;
}
