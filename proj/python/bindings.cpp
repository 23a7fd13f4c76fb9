#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "leafkernel/bigis.hpp"
#include "leafkernel/generators.hpp"
#include "leafkernel/io.hpp"
#include "leafkernel/kernel.hpp"
#include "leafkernel/oracle.hpp"
#include "leafkernel/outerplanar.hpp"
#include "leafkernel/spanning_tree.hpp"

namespace py = pybind11;
using namespace leafkernel;

namespace {

Graph graph_from(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

py::object answer(const std::optional<Answer>& a) {
    if (!a) return py::none();
    return py::str(*a == Answer::yes ? "yes" : "no");
}

std::string certificate_text(const Certificate& c) {
    std::ostringstream out;
    write_certificate(out, c);
    return out.str();
}

Certificate certificate_from(const std::string& text) {
    std::istringstream in(text);
    return read_certificate(in);
}

py::dict reduced_dict(const Reduced& r) {
    py::dict d;
    d["decided"] = answer(r.decided);
    d["instance"] = r.instance;
    d["steps"] = r.trace.steps.size();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kernels for planar nonseparating independent set and max leaf spanning tree";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<OracleGuardError>(m, "OracleGuardError", PyExc_ValueError);
    py::register_exception<ReductionError>(m, "ReductionError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("vertices", &Graph::vertices)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
        });

    py::class_<Instance>(m, "Instance")
        .def(py::init([](Graph g, const std::string& problem, std::int64_t parameter) {
                 return Instance{std::move(g), parse_problem(problem), parameter};
             }),
             py::arg("graph"), py::arg("problem"), py::arg("parameter"))
        .def_readwrite("graph", &Instance::graph)
        .def_property(
            "problem", [](const Instance& i) { return std::string(to_string(i.problem)); },
            [](Instance& i, const std::string& p) { i.problem = parse_problem(p); })
        .def_readwrite("parameter", &Instance::parameter);

    m.def("parse_instance", &parse_instance_text, py::arg("text"));
    m.def("serialize_instance", &serialize_instance, py::arg("instance"));
    m.def(
        "generate",
        [](const std::string& family, const std::string& size, std::uint64_t seed, const std::string& problem,
           std::int64_t parameter) { return generate_instance(family, parse_size(size), seed, parse_problem(problem), parameter); },
        py::arg("family"), py::arg("size"), py::arg("seed") = 1, py::arg("problem") = "nsis", py::arg("parameter") = -1);

    m.def("nsis_preprocess", [](const Instance& i) { return reduced_dict(nsis_preprocess(i)); });
    m.def("reduce_dual_separator_exhaustive", [](const Instance& i) { return reduced_dict(reduce_dual_separator_exhaustive(i)); });
    m.def("reduce_maxleaf", [](const Instance& i) { return reduced_dict(reduce_maxleaf(i)); });
    m.def("find_deg2_separator", &find_deg2_separator);

    m.def(
        "build_spanning_tree",
        [](const Graph& g, const std::string& strategy) {
            const TreeRecord t = build_spanning_tree(g, parse_strategy(strategy));
            const TreeStats s = tree_stats(t);
            py::dict d;
            d["root"] = t.root;
            d["leaves"] = t.leaves;
            std::vector<Edge> edges;
            for (VertexId v = 0; v < t.parent.size(); ++v) {
                if (t.parent[v] != kNoVertex) edges.emplace_back(v, t.parent[v]);
            }
            d["parent_of"] = edges;
            std::vector<std::pair<int, VertexId>> ops;
            for (const auto& e : t.expansions) ops.emplace_back(static_cast<int>(e.op), e.expanded);
            d["expansions"] = ops;
            d["x"] = std::vector<std::size_t>{s.x1, s.x2, s.x3, s.x4};
            return d;
        },
        py::arg("graph"), py::arg("strategy") = "branching");

    m.def("is_outerplanar", [](const Graph& g) { return std::holds_alternative<OuterplanarEmbedding>(recognize_and_embed(g)); });
    m.def("largest_color_class", &largest_color_class);
    m.def("independent_set_with_cycles", [](const Graph& h) {
        const BigisResult r = independent_set_with_cycles(h);
        return py::make_tuple(r.independent, r.cycles.cycles);
    });

    m.def("max_nsis", [](const Graph& g) {
        const auto r = max_nsis_bruteforce(g);
        return py::make_tuple(r.optimum, r.witness);
    });
    m.def("min_cvc", [](const Graph& g) {
        const auto r = min_cvc_bruteforce(g);
        return py::make_tuple(r.optimum, r.witness);
    });
    m.def("max_leaf", [](const Graph& g) {
        const auto r = max_leaf_via_dominating_set(g);
        return py::make_tuple(r.optimum, r.tree_edges);
    });
    m.def("oracle_answer", [](const Instance& i) { return oracle_answer(i) == Answer::yes ? "yes" : "no"; });

    m.def(
        "kernelize",
        [](const Instance& inst, const std::string& pipeline) {
            const KernelOutcome o = kernelize(inst, parse_pipeline(pipeline));
            py::dict d;
            d["decided"] = answer(o.decided);
            d["certificate"] = o.decided == Answer::yes ? py::object(py::str(certificate_text(o.certificate))) : py::none();
            d["reduced"] = o.decided ? py::none() : py::cast(o.reduced);
            d["cvc_parameter"] = o.cvc_parameter;
            d["bound"] = size_factor(o.pipeline);
            d["steps"] = o.trace.steps.size();
            return d;
        },
        py::arg("instance"), py::arg("pipeline") = "nsis-9k");
    m.def(
        "verify_certificate",
        [](const Graph& g, const std::string& certificate, std::int64_t parameter) {
            return verify_certificate(g, certificate_from(certificate), parameter);
        },
        py::arg("graph"), py::arg("certificate"), py::arg("parameter"));
}
