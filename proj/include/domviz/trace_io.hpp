#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "domviz/audit.hpp"

namespace domviz {

// JSON serialization of ProofTrace, schema tag "domviz.trace/1":
//   - G and H embedded as graph6 strings plus labels;
//   - vertex sets over G or H as sorted integer arrays;
//   - vertex sets over the product as sorted [u, v] coordinate arrays;
//   - c_pairs as [i, v] arrays, lexicographic;
//   - every check verdict recorded by name under "checks".
// The trace is self-contained: verify_trace re-derives every verdict from
// the recorded sets alone.

struct TraceParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json trace_to_json(const ProofTrace& trace);

// Strict: unknown keys, missing fields, wrong types, unsorted or out-of-range
// vertex arrays all throw TraceParseError.
ProofTrace trace_from_json(const nlohmann::json& j);

// Re-verification without solver access. Every check is recomputed from the
// recorded extensional sets (plus the embedded graphs); recorded witnesses
// are certificate-checked against the recorded numbers:
//   - f must be a valid RDF of weight gammaR_product (so gamma_R <= recorded),
//   - gamma_h_witness must dominate H with gamma_h vertices,
//   - the partition representatives must dominate G with gamma_g vertices.
// Minimality of the recorded gamma values is not re-derivable without a
// solver and is exactly what the certificates bound from above.
struct VerifyResult {
    TraceChecks checks;                  // recomputed, not the recorded bits
    std::vector<std::string> failures;   // one line per failed check/mismatch

    bool pass() const { return failures.empty(); }
};

VerifyResult verify_trace(const ProofTrace& trace);

// Parse + verify in one step.
VerifyResult verify_trace_json(const nlohmann::json& j);

}  // namespace domviz
