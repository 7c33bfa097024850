#include "eccmat/report.hpp"

#include <cstdio>
#include <cstdlib>

#include "eccmat/ecc.hpp"
#include "eccmat/linalg.hpp"
#include "eccmat/metrics.hpp"
#include "eccmat/structure.hpp"

namespace eccmat {

using nlohmann::json;

double round_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

json values_to_json(const std::vector<double>& xs) {
    json a = json::array();
    for (double x : xs) a.push_back(round_sig12(x));
    return a;
}

json poly_to_json(const IntPolynomial& p) {
    // Decimal strings survive arbitrary precision.
    json a = json::array();
    for (const auto& c : p.coeffs) a.push_back(c.get_str());
    return a;
}

}  // namespace

json spectrum_to_json(const Spectrum& s) {
    json groups = json::array();
    for (const auto& [rep, mult] : s.groups)
        groups.push_back(json{{"value", round_sig12(rep)}, {"multiplicity", mult}});
    return json{{"values", values_to_json(s.values)}, {"groups", groups}};
}

json verdict_to_json(const Verdict& v) {
    json j{{"check_id", v.check_id}};
    if (v.skipped()) {
        j["skipped_reason"] = *v.skipped_reason;
    } else {
        j["passed"] = v.passed;
        j["residual"] = round_sig12(v.residual);
    }
    if (!v.details.empty()) j["details"] = v.details;
    return j;
}

json sweep_summary_to_json(const SweepSummary& s) {
    json per_order = json::object();
    for (const auto& [n, count] : s.graphs_per_order) per_order[std::to_string(n)] = count;
    json counter = json::array();
    for (const auto& v : s.counterexamples) counter.push_back(verdict_to_json(v));
    return json{{"graphs", s.graphs},
                {"graphs_per_order", per_order},
                {"passes", s.passes},
                {"failures", s.failures},
                {"skips", s.skips},
                {"mode", s.exhaustive ? "exhaustive" : "sample"},
                {"seed", s.seed},
                {"counterexamples", counter}};
}

json build_report(const Graph& g, const std::string& source_format) {
    auto dp = distance_profile(g);
    auto vc = vertex_classes(g, dp);
    auto e = eccentricity_matrix(g, dp);
    auto stats = ecc_stats(e);
    auto el = ecc_laplacian(e, stats);
    auto eq = ecc_signless_laplacian(e, stats);

    json ecc{{"transmission", stats.tr},
             {"tr_min", stats.tr_min},
             {"tr_max", stats.tr_max},
             {"tr_avg", round_sig12(stats.tr_avg())},
             {"wiener", stats.wiener},
             {"sq_sum", stats.sq_sum}};
    ecc["regular_degree"] = stats.regular_degree ? json(*stats.regular_degree) : json(nullptr);

    json structure{{"irreducible", is_irreducible(e)}};
    if (g.order() >= 2) {
        auto bp = ecc_bipartition(e);
        structure["ecc_bipartite"] = bp.has_value();
        if (bp) {
            structure["bipartition"] = json{{"part_a", bp->part_a}, {"part_b", bp->part_b}};
        } else {
            structure["bipartition"] = nullptr;
        }
    } else {
        structure["ecc_bipartite"] = false;
        structure["bipartition"] = nullptr;
    }

    return json{
        {"input",
         {{"format", source_format},
          {"graph6", encode_graph6(g)},
          {"n", g.order()},
          {"m", g.edge_count()}}},
        {"metrics",
         {{"diameter", dp.diameter},
          {"radius", dp.radius},
          {"eccentricities", dp.ecc},
          {"degree_sequence", g.degree_sequence()},
          {"universal", vc.universal},
          {"central", vc.central},
          {"periphery", vc.periphery}}},
        {"ecc", ecc},
        {"spectra",
         {{"ecc", spectrum_to_json(sym_eigenvalues(e))},
          {"ecc_laplacian", spectrum_to_json(sym_eigenvalues(el))},
          {"ecc_signless_laplacian", spectrum_to_json(sym_eigenvalues(eq))}}},
        {"polynomials",
         {{"ecc", poly_to_json(char_poly_exact(e))},
          {"ecc_laplacian", poly_to_json(char_poly_exact(el))},
          {"ecc_signless_laplacian", poly_to_json(char_poly_exact(eq))}}},
        {"structure", structure}};
}

}  // namespace eccmat
