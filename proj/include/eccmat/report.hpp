#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "eccmat/graph.hpp"
#include "eccmat/verify.hpp"

namespace eccmat {

// Rounds to 12 significant digits; the serialization contract for floats.
double round_sig12(double x);

nlohmann::json spectrum_to_json(const struct Spectrum& s);
nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json sweep_summary_to_json(const SweepSummary& s);

// Full single-graph report: input echo, metric/eccentricity statistics,
// spectra, exact polynomials, and structural flags.
nlohmann::json build_report(const Graph& g, const std::string& source_format);

}  // namespace eccmat
