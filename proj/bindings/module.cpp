#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "specfactor/canonical.hpp"
#include "specfactor/enumerate.hpp"
#include "specfactor/errors.hpp"
#include "specfactor/factors.hpp"
#include "specfactor/graph.hpp"
#include "specfactor/graph6.hpp"
#include "specfactor/matching.hpp"
#include "specfactor/report.hpp"
#include "specfactor/spectral.hpp"
#include "specfactor/verify.hpp"

namespace py = pybind11;
using namespace specfactor;

namespace {

std::vector<int> set_to_vec(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(__builtin_ctzll(s));
        s &= s - 1;
    }
    return out;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Found: return "Found";
        case Outcome::Refuted: return "Refuted";
        default: return "NotFound";
    }
}

py::dict factor_to_dict(const FactorResult& r) {
    py::dict d;
    d["outcome"] = outcome_name(r.outcome);
    if (r.outcome == Outcome::Found) {
        py::list edges;
        for (const Edge& e : r.factor.edges()) edges.append(py::make_tuple(e.u, e.v));
        d["factor_edges"] = edges;
    } else if (r.outcome == Outcome::Refuted) {
        d["witness"] = set_to_vec(r.witness);
    } else {
        d["exhaustive"] = r.exhaustive;
    }
    d["method"] = r.method;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectral radius and graph factor primitives (64-vertex cap)";

    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("size", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("degree", &Graph::degree)
        .def("edges",
             [](const Graph& g) {
                 py::list out;
                 for (const Edge& e : g.edges()) out.append(py::make_tuple(e.u, e.v));
                 return out;
             })
        .def("min_degree", [](const Graph& g) { return min_degree(g); })
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("from_graph6", [](const std::string& s) { return parse_graph6(s); },
          "parse one graph6 line");
    m.def("to_graph6", [](const Graph& g) { return write_graph6(g); });
    m.def("canonical_code", [](const Graph& g) { return canonical_code(g); },
          "isomorphism-invariant code (orders up to 10)");

    m.def("h_na", &h_na, py::arg("n"), py::arg("a"));
    m.def("t_graph", &t_graph, py::arg("n"), py::arg("b"), py::arg("delta"));
    m.def("g_unique_pm", &g_unique_pm, py::arg("two_n"));
    m.def("g_unique_kfactor", &g_unique_kfactor, py::arg("two_n"), py::arg("k"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("circulant", &circulant, py::arg("n"), py::arg("offsets"));

    m.def(
        "spectral_radius",
        [](const Graph& g, double tol) {
            const Spectrum sp = spectral_radius(g, tol);
            py::dict d;
            d["rho"] = sp.rho;
            d["iterations"] = sp.iterations;
            d["residual"] = sp.residual;
            return d;
        },
        py::arg("g"), py::arg("tol") = 1e-10);

    m.def(
        "compare_rho",
        [](const Graph& g, const Graph& h, double tie_tol) {
            const RhoOrder ord = compare_rho(g, h, tie_tol);
            const char* v = ord.verdict == Verdict::Less      ? "Less"
                            : ord.verdict == Verdict::Greater ? "Greater"
                                                              : "Tie";
            return py::make_tuple(v, ord.margin);
        },
        py::arg("g"), py::arg("h"), py::arg("tie_tol") = 1e-9);

    m.def(
        "ab_factor",
        [](const Graph& g, int a, int b, bool odd) {
            return factor_to_dict(ab_factor(g, FactorQuery{a, b, odd}));
        },
        py::arg("g"), py::arg("a") = 1, py::arg("b") = 1, py::arg("odd") = false);

    m.def("perfect_matching",
          [](const Graph& g) { return factor_to_dict(perfect_matching(g)); });

    m.def(
        "fractional_pm",
        [](const Graph& g) {
            const FractionalPmResult fr = fractional_pm(g);
            py::dict d = factor_to_dict(fr.result);
            if (fr.matching) {
                py::list ws;
                for (const auto& [edge, w] : fr.matching->weights)
                    ws.append(py::make_tuple(edge.u, edge.v, w));
                d["weights"] = ws;
            }
            return d;
        });

    m.def("count_perfect_matchings",
          [](const Graph& g, long long cap) { return count_perfect_matchings(g, cap); },
          py::arg("g"), py::arg("cap") = 1000000);
    m.def("max_matching_size", [](const Graph& g) { return max_matching(g).size(); });

    // Theorem verifications return the JSON report text; the package wrapper
    // loads it into a dict.
    m.def(
        "verify",
        [](const std::string& theorem, const py::kwargs& kw) {
            auto geti = [&](const char* k, int dflt) {
                return kw.contains(k) ? kw[k].cast<int>() : dflt;
            };
            VerificationReport rep;
            if (theorem == "thm1.1") {
                EnumerationSource src;
                src.n = geti("two_n", 0);
                rep = verify_thm_1_1(src.n, src, geti("jobs", 1));
            } else if (theorem == "thm1.3") {
                EnumerationSource src;
                src.n = geti("n", 0);
                rep = verify_thm_1_3(src.n, geti("a", 1), geti("b", 1), src, geti("jobs", 1));
            } else if (theorem == "cor1.1") {
                EnumerationSource src;
                src.n = geti("n", 0);
                rep = verify_cor_1_1(src.n, geti("k", 1), src, geti("jobs", 1));
            } else if (theorem == "thm1.2" || theorem == "thm5.1i" || theorem == "thm5.1ii") {
                Sampler smp;
                smp.count = geti("samples", 1000);
                smp.seed = kw.contains("seed") ? kw["seed"].cast<std::uint64_t>() : 1;
                if (theorem == "thm1.2")
                    rep = verify_thm_1_2(geti("n", 0), geti("b", 1), geti("delta", 1), smp);
                else
                    rep = verify_thm_5_1(geti("n", 0), geti("b", 2), geti("delta", 1),
                                         theorem == "thm5.1i" ? Thm51Variant::OneB
                                                              : Thm51Variant::FractionalPM,
                                         smp);
            } else if (theorem == "lemmas") {
                rep = verify_lemma_suite(geti("n_max", 5));
            } else {
                throw std::invalid_argument("unknown theorem " + theorem);
            }
            return report_to_string(rep);
        },
        py::arg("theorem"));
}
