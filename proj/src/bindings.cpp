#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eccmat/ecc.hpp"
#include "eccmat/graph.hpp"
#include "eccmat/linalg.hpp"
#include "eccmat/metrics.hpp"
#include "eccmat/report.hpp"
#include "eccmat/structure.hpp"
#include "eccmat/verify.hpp"

namespace py = pybind11;
using namespace eccmat;

namespace {

std::vector<std::vector<long long>> matrix_rows(const SymIntMatrix& m) {
    std::vector<std::vector<long long>> rows(m.order(), std::vector<long long>(m.order()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["check_id"] = v.check_id;
    if (v.skipped()) {
        d["skipped_reason"] = *v.skipped_reason;
    } else {
        d["passed"] = v.passed;
        d["residual"] = v.residual;
    }
    d["details"] = v.details;
    return d;
}

Graph graph_from_family(const std::string& name, const std::vector<int>& params) {
    auto f = family_from_name(name);
    if (!f) throw std::invalid_argument("unknown family: " + name);
    return generate(*f, params);
}

}  // namespace

PYBIND11_MODULE(_eccmat, m) {
    m.doc() = "eccentricity matrix spectra toolkit";

    py::register_exception<DisconnectedGraph>(m, "DisconnectedGraphError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def("degree_sequence", &Graph::degree_sequence)
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" +
                   std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_edge_list", &parse_edge_list);
    m.def("parse_graph6", &parse_graph6);
    m.def("encode_graph6", &encode_graph6);
    m.def("generate", &graph_from_family, py::arg("family"),
          py::arg("params") = std::vector<int>{});
    m.def("join", &join);
    m.def("complement", &complement);

    m.def("distance_matrix", [](const Graph& g) { return distance_profile(g).dist; });
    m.def("eccentricities", [](const Graph& g) { return distance_profile(g).ecc; });
    m.def("diameter", [](const Graph& g) { return distance_profile(g).diameter; });
    m.def("radius", [](const Graph& g) { return distance_profile(g).radius; });

    m.def("eccentricity_matrix", [](const Graph& g) {
        return matrix_rows(eccentricity_matrix(g, distance_profile(g)));
    });
    m.def("ecc_laplacian", [](const Graph& g) {
        auto e = eccentricity_matrix(g, distance_profile(g));
        return matrix_rows(ecc_laplacian(e, ecc_stats(e)));
    });
    m.def("ecc_signless_laplacian", [](const Graph& g) {
        auto e = eccentricity_matrix(g, distance_profile(g));
        return matrix_rows(ecc_signless_laplacian(e, ecc_stats(e)));
    });
    m.def("ecc_transmissions", [](const Graph& g) {
        return ecc_stats(eccentricity_matrix(g, distance_profile(g))).tr;
    });
    m.def("ecc_wiener_index", [](const Graph& g) {
        return ecc_stats(eccentricity_matrix(g, distance_profile(g))).wiener;
    });

    auto eigenvalues_of = [](const SymIntMatrix& m) { return sym_eigenvalues(m).values; };
    m.def("ecc_spectrum", [=](const Graph& g) {
        return eigenvalues_of(eccentricity_matrix(g, distance_profile(g)));
    });
    m.def("ecc_laplacian_spectrum", [=](const Graph& g) {
        auto e = eccentricity_matrix(g, distance_profile(g));
        return eigenvalues_of(ecc_laplacian(e, ecc_stats(e)));
    });
    m.def("ecc_signless_laplacian_spectrum", [=](const Graph& g) {
        auto e = eccentricity_matrix(g, distance_profile(g));
        return eigenvalues_of(ecc_signless_laplacian(e, ecc_stats(e)));
    });

    auto char_poly_strings = [](const SymIntMatrix& m) {
        std::vector<std::string> out;
        for (const auto& c : char_poly_exact(m).coeffs) out.push_back(c.get_str());
        return out;
    };
    m.def("ecc_char_poly", [=](const Graph& g) {
        return char_poly_strings(eccentricity_matrix(g, distance_profile(g)));
    });
    m.def("ecc_laplacian_char_poly", [=](const Graph& g) {
        auto e = eccentricity_matrix(g, distance_profile(g));
        return char_poly_strings(ecc_laplacian(e, ecc_stats(e)));
    });
    m.def("ecc_signless_laplacian_char_poly", [=](const Graph& g) {
        auto e = eccentricity_matrix(g, distance_profile(g));
        return char_poly_strings(ecc_signless_laplacian(e, ecc_stats(e)));
    });

    m.def("is_ecc_irreducible", [](const Graph& g) {
        return is_irreducible(eccentricity_matrix(g, distance_profile(g)));
    });
    m.def("ecc_bipartition", [](const Graph& g) -> py::object {
        if (g.order() < 2) return py::none();
        auto bp = ecc_bipartition(eccentricity_matrix(g, distance_profile(g)));
        if (!bp) return py::none();
        return py::make_tuple(bp->part_a, bp->part_b);
    });

    m.def("run_check", [](const std::string& id, const Graph& g) {
        return verdict_dict(run_check(id, g));
    });
    m.def("check_closed_forms", [](const std::string& family, const std::vector<int>& params) {
        auto f = family_from_name(family);
        if (!f) throw std::invalid_argument("unknown family: " + family);
        return verdict_dict(check_closed_forms(*f, params));
    });
    m.def("check_ids", [] { return sweep_check_ids(); });
    m.def(
        "run_sweep",
        [](int n_max, const std::string& mode, std::uint64_t count, std::uint64_t seed,
           int jobs) {
            SweepOptions opts;
            opts.n_max = n_max;
            opts.exhaustive = mode == "exhaustive";
            opts.sample_count = count;
            opts.seed = seed;
            opts.jobs = jobs;
            auto s = run_sweep(opts);
            py::dict d;
            d["graphs"] = s.graphs;
            d["passes"] = s.passes;
            d["failures"] = s.failures;
            d["skips"] = s.skips;
            d["graphs_per_order"] = s.graphs_per_order;
            py::list counter;
            for (const auto& v : s.counterexamples) counter.append(verdict_dict(v));
            d["counterexamples"] = counter;
            return d;
        },
        py::arg("n_max"), py::arg("mode") = "exhaustive", py::arg("count") = 0,
        py::arg("seed") = 0, py::arg("jobs") = 1);

    m.def("report_json", [](const Graph& g) {
        return build_report(g, "python").dump();
    });
}
