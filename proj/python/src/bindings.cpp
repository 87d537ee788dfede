#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lhamil/cli.hpp"
#include "lhamil/closure.hpp"
#include "lhamil/embedding.hpp"
#include "lhamil/error.hpp"
#include "lhamil/extremal.hpp"
#include "lhamil/graph.hpp"
#include "lhamil/graph6.hpp"
#include "lhamil/hamiltonicity.hpp"
#include "lhamil/report_io.hpp"
#include "lhamil/verify.hpp"

namespace py = pybind11;
using namespace lhamil;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList edge_list(const std::vector<Edge>& edges) {
    EdgeList out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

LinearForest forest(const EdgeList& edges) {
    std::vector<Edge> es;
    for (auto [u, v] : edges) es.emplace_back(u, v);
    return LinearForest(std::move(es));
}


SweepConfig make_config(int n, int d, int ell, int r, int workers, bool degree_filter, std::size_t argmax_limit) {
    SweepConfig c;
    c.n = n;
    c.d = d;
    c.ell = ell;
    c.r = r;
    c.workers = workers;
    c.degree_filter = degree_filter;
    c.argmax_limit = argmax_limit;
    return c;
}

std::vector<Graph> stream_or_internal(SweepConfig& c, const std::optional<std::vector<Graph>>& graphs) {
    if (!graphs) return {};
    c.source = SweepSource::Stream;
    return *graphs;
}

template <class F>
auto without_gil(F f) {
    py::gil_scoped_release release;
    return f();
}

// Reports cross the boundary as their JSON form, decoded by Python's json module.
py::object as_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object witness_dict(const ExtremalWitness& w) { return as_python(to_json(w)); }

py::object optional_witness(const std::optional<ExtremalWitness>& w) {
    if (!w) return py::none();
    return witness_dict(*w);
}

}  // namespace

PYBIND11_MODULE(_lhamil, m) {
    m.doc() = "l-hamiltonicity, extremal constructions and exhaustive verification";

    static py::exception<Graph6Error> graph6_error(m, "Graph6Error", PyExc_ValueError);
    static py::exception<ParameterError> parameter_error(m, "ParameterError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Graph6Error& e) {
            py::set_error(graph6_error, e.what());
        } catch (const ParameterError& e) {
            py::set_error(parameter_error, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const EdgeList& edges) { return build_graph(n, std::span<const std::pair<int, int>>(edges)); }),
             py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("min_degree", &Graph::min_degree)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("edges", [](const Graph& g) { return edge_list(g.edges()); })
        .def("non_edges", [](const Graph& g) { return edge_list(g.non_edges()); })
        .def("degree_sequence", [](const Graph& g) { return degree_sequence(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph.from_graph6('" + write_graph6(g) + "')"; });

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("star_graph", &star_graph, py::arg("leaves"));
    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("write_graph6", &write_graph6);
    m.def("count_cliques", &count_cliques, py::arg("g"), py::arg("r"));
    m.def("is_linear_forest", [](const Graph& g, const EdgeList& edges) { return is_linear_forest(g, forest(edges)); });
    m.def("linear_forests", [](const Graph& g, int ell) {
        std::vector<EdgeList> out;
        for (const auto& f : enumerate_linear_forests(g, ell)) out.push_back(edge_list(f.edges()));
        return out;
    });

    m.def("build_H", [](int n, int d, int ell) {
        auto [g, w] = build_H(n, d, ell);
        return py::make_tuple(g, witness_dict(w));
    });
    m.def("build_Hprime", [](int n, int d, int ell) {
        auto [g, w] = build_Hprime(n, d, ell);
        return py::make_tuple(g, witness_dict(w));
    });
    m.def("gen_binom", &gen_binom);
    m.def("h_edges", &h_edges);
    m.def("h_r_value", &h_r_value);
    m.def("pp_bound", &pp_bound);
    m.def("stability_bound", &stability_bound);
    m.def("check_endpoint_convexity", &check_endpoint_convexity);

    m.def("find_hamiltonian_cycle", &find_hamiltonian_cycle);
    m.def("find_hamiltonian_cycle_through",
          [](const Graph& g, const EdgeList& forced) { return find_hamiltonian_cycle_through(g, forest(forced)); });
    m.def("is_l_hamiltonian", [](const Graph& g, int ell) {
        HamVerdict v = is_l_hamiltonian(g, ell);
        py::dict d;
        d["is_l_hamiltonian"] = v.is_l_hamiltonian;
        d["witness_forest"] = v.witness_forest ? py::cast(edge_list(v.witness_forest->edges())) : py::none();
        d["witness_cycle"] = v.witness_cycle ? py::cast(*v.witness_cycle) : py::none();
        return d;
    });
    m.def("rotation_close", [](const Graph& g, const std::vector<int>& path, const EdgeList& forced, int ell) {
        return rotation_close(g, path, forest(forced), ell);
    });

    m.def("k_closure", &k_closure);
    m.def("degree_sum_check", &degree_sum_check);
    m.def("posa_kronk_check", &posa_kronk_check);
    m.def("clique_upper_bound", py::overload_cast<int, int, int, int>(&clique_upper_bound));
    m.def("is_l_saturated", &is_l_saturated);
    m.def("saturate", &saturate);
    m.def("check_saturated_degree_sums", &check_saturated_degree_sums);

    m.def("embeds_into_H", [](const Graph& g, int d, int ell) { return optional_witness(embeds_into_H(g, d, ell)); });
    m.def("embeds_into_Hprime",
          [](const Graph& g, int d, int ell) { return optional_witness(embeds_into_Hprime(g, d, ell)); });
    m.def("generic_spanning_embedding", &generic_spanning_embedding);

    m.def("labeled_graphs", [](int n, std::optional<int> min_degree) { return enumerate_labeled_graphs(n, min_degree); },
          py::arg("n"), py::arg("min_degree") = py::none());

    m.def(
        "verify_pp_bound",
        [](int n, int d, int ell, int r, std::optional<std::vector<Graph>> graphs, int workers, bool filter,
           std::size_t limit) {
            SweepConfig c = make_config(n, d, ell, r, workers, filter, limit);
            auto gs = stream_or_internal(c, graphs);
            BoundReport rep = without_gil([&] { return graphs ? verify_pp_bound(c, gs) : verify_pp_bound(c); });
            return as_python(to_json(rep));
        },
        py::arg("n"), py::arg("d"), py::arg("ell"), py::arg("r") = 2, py::arg("graphs") = py::none(),
        py::arg("workers") = 1, py::arg("degree_filter") = true, py::arg("argmax_limit") = 16);
    m.def(
        "verify_stability",
        [](int n, int d, int ell, int r, std::optional<std::vector<Graph>> graphs, int workers, bool filter) {
            SweepConfig c = make_config(n, d, ell, r, workers, filter, 16);
            auto gs = stream_or_internal(c, graphs);
            StabilityReport rep = without_gil([&] { return graphs ? verify_stability(c, gs) : verify_stability(c); });
            return as_python(to_json(rep));
        },
        py::arg("n"), py::arg("d"), py::arg("ell"), py::arg("r") = 2, py::arg("graphs") = py::none(),
        py::arg("workers") = 1, py::arg("degree_filter") = true);
    m.def(
        "verify_sufficiency",
        [](int n, int ell, std::optional<std::vector<Graph>> graphs, int workers) {
            SweepConfig c = make_config(n, 1, ell, 2, workers, true, 16);
            auto gs = stream_or_internal(c, graphs);
            SufficiencyReport rep =
                without_gil([&] { return graphs ? verify_sufficiency(c, gs) : verify_sufficiency(c); });
            return as_python(to_json(rep));
        },
        py::arg("n"), py::arg("ell"), py::arg("graphs") = py::none(), py::arg("workers") = 1);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out;
            std::ostringstream err;
            const int code = without_gil([&] { return run_cli(args, in, out, err); });
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "");
}
