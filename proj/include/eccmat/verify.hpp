#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eccmat/graph.hpp"

namespace eccmat {

struct Verdict {
    std::string check_id;
    bool passed = true;
    double residual = 0.0;
    std::map<std::string, std::string> details;
    std::optional<std::string> skipped_reason;

    bool skipped() const { return skipped_reason.has_value(); }
};

// Default tolerance for the spectral comparisons inside the checks (1e-6);
// the CLI's --tol flag overrides it process-wide. Exact integer checks and
// the separately pinned 1e-8 slacks are unaffected.
double spectral_tolerance();
void set_spectral_tolerance(double tol);

// Per-graph checks. Each returns a skip verdict when its hypothesis does not
// hold, and never mutates its input.
Verdict check_trace_identities(const Graph& g);
Verdict check_signless_bounds(const Graph& g);
Verdict check_transmission_regular_correspondence(const Graph& g);
Verdict check_join_spectra(const Graph& g);
Verdict check_diameter2_structure(const Graph& g);
Verdict check_ecc_bipartite_equivalences(const Graph& g);

// Closed-form characteristic polynomial check for one family instance.
Verdict check_closed_forms(Family f, const std::vector<int>& params);

// Identifiers accepted by run_sweep and the verify subcommand.
const std::vector<std::string>& sweep_check_ids();
bool is_sweep_check_id(const std::string& id);
Verdict run_check(const std::string& id, const Graph& g);

struct SweepOptions {
    int n_max = 4;
    bool exhaustive = true;
    std::uint64_t sample_count = 0;  // sample mode: draws per order
    std::uint64_t seed = 0;
    int jobs = 1;
    std::vector<std::string> checks;  // empty means all
};

struct SweepSummary {
    long long graphs = 0;
    long long passes = 0;
    long long failures = 0;
    long long skips = 0;
    std::map<int, long long> graphs_per_order;
    // Failing verdicts, each detail payload carrying the graph6 certificate;
    // sorted by (graph6, check id).
    std::vector<Verdict> counterexamples;
    std::uint64_t seed = 0;
    bool exhaustive = true;
};

SweepSummary run_sweep(const SweepOptions& opts);

}  // namespace eccmat
