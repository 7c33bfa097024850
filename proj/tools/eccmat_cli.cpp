#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "eccmat/graph.hpp"
#include "eccmat/metrics.hpp"
#include "eccmat/report.hpp"
#include "eccmat/verify.hpp"

namespace {

using eccmat::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

struct GraphInput {
    std::string graph6;
    std::string file;
    std::string format = "graph6";
    std::string family;
    std::vector<int> params;
};

void add_graph_input_flags(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--graph6", in.graph6, "inline graph6 string");
    cmd->add_option("--file", in.file, "input file path");
    cmd->add_option("--format", in.format, "input file format: graph6 | edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd->add_option("--family", in.family,
                    "graph family: complete | complete_minus_edge | complete_bipartite | "
                    "cycle | path | star | petersen");
    cmd->add_option("--params", in.params, "family parameters");
}

// Returns (graph, source description). Throws std::invalid_argument on bad
// input selection or parse failure.
std::pair<Graph, std::string> load_graph(const GraphInput& in) {
    int sources = !in.graph6.empty() + !in.file.empty() + !in.family.empty();
    if (sources != 1)
        throw std::invalid_argument("provide exactly one of --graph6, --file, --family");
    if (!in.graph6.empty()) return {eccmat::parse_graph6(in.graph6), "graph6"};
    if (!in.family.empty()) {
        auto f = eccmat::family_from_name(in.family);
        if (!f) throw std::invalid_argument("unknown family: " + in.family);
        return {eccmat::generate(*f, in.params), "family:" + in.family};
    }
    std::ifstream is(in.file);
    if (!is) throw std::invalid_argument("cannot open file: " + in.file);
    std::stringstream buf;
    buf << is.rdbuf();
    if (in.format == "edgelist") return {eccmat::parse_edge_list(buf.str()), "edgelist"};
    return {eccmat::parse_graph6(buf.str()), "graph6"};
}

void emit(const json& j, bool pretty, std::ostream& os = std::cout) {
    os << (pretty ? j.dump(2) : j.dump()) << "\n";
}

void emit_error(const std::string& kind, const std::string& message, bool pretty) {
    emit(json{{"error", {{"kind", kind}, {"message", message}}}}, pretty, std::cerr);
}

std::string timestamp_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

bool parse_range(const std::string& s, int& lo, int& hi) {
    auto pos = s.find("..");
    if (pos == std::string::npos) return false;
    try {
        lo = std::stoi(s.substr(0, pos));
        hi = std::stoi(s.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eccentricity-matrix spectra toolkit"};
    app.require_subcommand(1);

    double tol = 1e-6;
    bool pretty = false;
    bool no_timestamp = false;
    app.add_option("--tol", tol, "spectral comparison tolerance (default 1e-6)");
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field");

    auto* report_cmd = app.add_subcommand("report", "full single-graph report");
    GraphInput report_in;
    add_graph_input_flags(report_cmd, report_in);
    bool with_verdicts = false;
    report_cmd->add_flag("--verdicts", with_verdicts, "append all applicable theorem checks");

    auto* verify_cmd = app.add_subcommand("verify", "run theorem checks");
    std::string check_id;
    GraphInput verify_in;
    std::string range;
    verify_cmd->add_option("check", check_id,
                           "trace | bounds | transmission-regular | join | diameter2 | "
                           "bipartite | closed-forms | all")
        ->required();
    add_graph_input_flags(verify_cmd, verify_in);
    verify_cmd->add_option("--range", range,
                           "parameter range A..B for closed-forms family sweeps");

    auto* sweep_cmd = app.add_subcommand("sweep", "run checks over all small connected graphs");
    int n_max = 4;
    std::string mode = "exhaustive";
    std::uint64_t count = 0, seed = 0;
    int jobs = 1;
    std::vector<std::string> check_list;
    sweep_cmd->add_option("--n-max", n_max, "largest order to sweep")->required();
    sweep_cmd->add_option("--mode", mode, "exhaustive | sample")
        ->check(CLI::IsMember({"exhaustive", "sample"}));
    sweep_cmd->add_option("--count", count, "sample mode: draws per order");
    sweep_cmd->add_option("--seed", seed, "sample mode RNG seed");
    sweep_cmd->add_option("--jobs", jobs, "worker threads");
    sweep_cmd->add_option("--checks", check_list, "subset of check ids (default all)");

    CLI11_PARSE(app, argc, argv);
    eccmat::set_spectral_tolerance(tol);

    try {
        if (*report_cmd) {
            std::pair<Graph, std::string> loaded = [&] {
                try {
                    return load_graph(report_in);
                } catch (const std::exception& ex) {
                    emit_error("parse", ex.what(), pretty);
                    std::exit(kExitUsage);
                }
            }();
            json j;
            try {
                j = eccmat::build_report(loaded.first, loaded.second);
            } catch (const eccmat::DisconnectedGraph& ex) {
                emit_error("disconnected", ex.what(), pretty);
                return kExitDomain;
            }
            if (with_verdicts) {
                json verdicts = json::array();
                for (const auto& id : eccmat::sweep_check_ids())
                    verdicts.push_back(
                        eccmat::verdict_to_json(eccmat::run_check(id, loaded.first)));
                j["verdicts"] = verdicts;
            }
            if (!no_timestamp) j["timestamp"] = timestamp_now();
            emit(j, pretty);
            return kExitOk;
        }

        if (*verify_cmd) {
            std::vector<eccmat::Verdict> verdicts;
            if (check_id == "closed-forms") {
                auto f = verify_in.family.empty()
                             ? std::nullopt
                             : eccmat::family_from_name(verify_in.family);
                if (!f) {
                    emit_error("usage", "closed-forms requires a known --family", pretty);
                    return kExitUsage;
                }
                if (!range.empty()) {
                    int lo, hi;
                    if (!parse_range(range, lo, hi)) {
                        emit_error("usage", "bad --range, expected A..B", pretty);
                        return kExitUsage;
                    }
                    if (*f == eccmat::Family::complete_bipartite) {
                        for (int m = lo; m <= hi; ++m)
                            for (int n = lo; n <= hi; ++n)
                                verdicts.push_back(eccmat::check_closed_forms(*f, {m, n}));
                    } else {
                        for (int n = lo; n <= hi; ++n)
                            verdicts.push_back(eccmat::check_closed_forms(*f, {n}));
                    }
                } else {
                    verdicts.push_back(eccmat::check_closed_forms(*f, verify_in.params));
                }
            } else if (check_id == "all" || eccmat::is_sweep_check_id(check_id)) {
                std::pair<Graph, std::string> loaded = [&] {
                    try {
                        return load_graph(verify_in);
                    } catch (const std::exception& ex) {
                        emit_error("parse", ex.what(), pretty);
                        std::exit(kExitUsage);
                    }
                }();
                if (!loaded.first.is_connected()) {
                    emit_error("disconnected", "input graph is disconnected", pretty);
                    return kExitDomain;
                }
                if (check_id == "all") {
                    for (const auto& id : eccmat::sweep_check_ids())
                        verdicts.push_back(eccmat::run_check(id, loaded.first));
                } else {
                    verdicts.push_back(eccmat::run_check(check_id, loaded.first));
                }
            } else {
                emit_error("usage", "unknown check id: " + check_id, pretty);
                return kExitUsage;
            }
            json out = json::array();
            bool any_failure = false;
            for (const auto& v : verdicts) {
                if (!v.skipped() && !v.passed) any_failure = true;
                out.push_back(eccmat::verdict_to_json(v));
            }
            json j{{"verdicts", out}};
            if (!no_timestamp) j["timestamp"] = timestamp_now();
            emit(j, pretty);
            return any_failure ? kExitVerification : kExitOk;
        }

        if (*sweep_cmd) {
            eccmat::SweepOptions opts;
            opts.n_max = n_max;
            opts.exhaustive = mode == "exhaustive";
            opts.sample_count = count;
            opts.seed = seed;
            opts.jobs = jobs;
            opts.checks = check_list;
            if (!opts.exhaustive && count == 0) {
                emit_error("usage", "sample mode requires --count", pretty);
                return kExitUsage;
            }
            eccmat::SweepSummary summary;
            try {
                summary = eccmat::run_sweep(opts);
            } catch (const std::invalid_argument& ex) {
                emit_error("usage", ex.what(), pretty);
                return kExitUsage;
            }
            json j = eccmat::sweep_summary_to_json(summary);
            if (!no_timestamp) j["timestamp"] = timestamp_now();
            emit(j, pretty);
            return summary.failures == 0 ? kExitOk : kExitVerification;
        }
    } catch (const std::exception& ex) {
        emit_error("internal", ex.what(), pretty);
        return kExitUsage;
    }
    return kExitUsage;
}
