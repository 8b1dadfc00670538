#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <variant>

#include "pvc/compress.hpp"
#include "pvc/degeneracy.hpp"
#include "pvc/errors.hpp"
#include "pvc/io.hpp"
#include "pvc/oracle.hpp"
#include "pvc/solver.hpp"
#include "pvc/universal.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> labels_of(const pvc::WeightedGraph& g,
                                   const std::vector<pvc::VertexId>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (pvc::VertexId v : ids) out.push_back(g.label(v));
    return out;
}

std::vector<pvc::VertexId> ids_of(const pvc::WeightedGraph& g,
                                  const std::vector<std::string>& labels) {
    std::vector<pvc::VertexId> out;
    out.reserve(labels.size());
    for (const auto& label : labels) {
        const auto id = g.find_vertex(label);
        if (!id.has_value()) throw pvc::input_error("unknown vertex label '" + label + "'");
        out.push_back(*id);
    }
    return out;
}

py::dict solution_dict(const pvc::WeightedGraph& g, const pvc::Solution& sol) {
    py::dict d;
    d["solution"] = labels_of(g, sol.vertices);
    d["value"] = sol.value;
    d["reported_value"] = sol.reported_value;
    d["algorithm"] = sol.algorithm;
    d["strategy"] = sol.strategy;
    d["seed"] = sol.seed;
    d["l"] = sol.l;
    d["degeneracy"] = sol.degeneracy;
    d["family_size"] = sol.family_size;
    d["members_evaluated"] = sol.members_evaluated;
    return d;
}

pvc::WeightedGraph graph_from_edges(
    const std::vector<std::tuple<std::string, std::string, pvc::Weight>>& edges,
    const std::vector<std::string>& isolated) {
    pvc::GraphBuilder b;
    for (const auto& [u, v, w] : edges) {
        const auto iu = b.ensure_vertex(u);
        const auto iv = b.ensure_vertex(v);
        if (iu == iv) {
            b.add_loop(iu, w);
        } else {
            b.add_edge(iu, iv, w);
        }
    }
    for (const auto& label : isolated) b.ensure_vertex(label);
    return b.build();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact partial vertex cover on bounded-degeneracy graphs";

    py::register_exception<pvc::input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<pvc::capability_error>(m, "CapabilityError", PyExc_RuntimeError);
    py::register_exception<pvc::internal_error>(m, "InternalError", PyExc_AssertionError);

    py::class_<pvc::WeightedGraph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("edges"),
             py::arg("isolated") = std::vector<std::string>{},
             "Build from (u, v, w) label triples; u == v adds loop weight.")
        .def_static("load", &pvc::load_instance, py::arg("path"))
        .def("save", &pvc::write_edge_list_file, py::arg("path"))
        .def_property_readonly("n", &pvc::WeightedGraph::vertex_count)
        .def_property_readonly("m", &pvc::WeightedGraph::edge_count)
        .def_property_readonly("labels", &pvc::WeightedGraph::labels)
        .def("degeneracy",
             [](const pvc::WeightedGraph& g) { return pvc::degeneracy_ordering(g).degeneracy; })
        .def("degree",
             [](const pvc::WeightedGraph& g, const std::string& v) {
                 return g.degree(ids_of(g, {v}).front());
             })
        .def("loop_weight",
             [](const pvc::WeightedGraph& g, const std::string& v) {
                 return g.loop_weight(ids_of(g, {v}).front());
             })
        .def("incident_weight",
             [](const pvc::WeightedGraph& g, const std::string& v) {
                 return g.incident_weight(ids_of(g, {v}).front());
             })
        .def("coverage",
             [](const pvc::WeightedGraph& g, const std::vector<std::string>& s) {
                 return g.coverage(ids_of(g, s));
             })
        .def("edges",
             [](const pvc::WeightedGraph& g) {
                 std::vector<std::tuple<std::string, std::string, pvc::Weight>> out;
                 for (const pvc::Edge& e : g.edges()) {
                     out.emplace_back(g.label(e.u), g.label(e.v), e.w);
                 }
                 return out;
             })
        .def("__repr__", [](const pvc::WeightedGraph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return s.str();
        });

    m.def(
        "solve",
        [](const pvc::WeightedGraph& g, int k, const std::string& strategy, std::uint64_t seed,
           double delta, int threads) {
            pvc::SolveConfig cfg;
            cfg.strategy = strategy;
            cfg.seed = seed;
            cfg.delta = delta;
            cfg.threads = threads;
            return solution_dict(g, pvc::solve(g, k, cfg));
        },
        py::arg("g"), py::arg("k"), py::arg("strategy") = "auto", py::arg("seed") = 0,
        py::arg("delta") = 1e-3, py::arg("threads") = 1);

    m.def(
        "brute_force_solve",
        [](const pvc::WeightedGraph& g, int k) {
            return solution_dict(g, pvc::brute_force_solve(g, k));
        },
        py::arg("g"), py::arg("k"));

    m.def(
        "degeneracy_ordering",
        [](const pvc::WeightedGraph& g) {
            const auto ord = pvc::degeneracy_ordering(g);
            py::dict d;
            d["order"] = labels_of(g, ord.order);
            d["degeneracy"] = ord.degeneracy;
            return d;
        },
        py::arg("g"));

    m.def(
        "compress",
        [](const pvc::WeightedGraph& g, int k, std::optional<int> p, bool planar) {
            pvc::CompressOptions opt;
            opt.p = p;
            opt.planar = planar;
            const auto result = pvc::compress(g, k, opt);
            py::dict d;
            if (const auto* bic = std::get_if<pvc::BicliqueReport>(&result)) {
                d["biclique"] = py::dict(py::arg("left") = bic->left, py::arg("right") = bic->right,
                                         py::arg("p") = bic->p);
                return d;
            }
            const auto& red = std::get<pvc::ReducedInstance>(result);
            d["h"] = red.h;
            py::dict rho;
            for (pvc::VertexId v = 0; v < red.h.vertex_count(); ++v) {
                rho[py::str(red.h.label(v))] = red.rho[static_cast<std::size_t>(v)];
            }
            d["rho"] = rho;
            d["reductions"] = red.trace.size();
            d["k"] = red.params.k;
            d["p"] = red.params.p;
            d["input_degeneracy"] = red.params.input_degeneracy;
            return d;
        },
        py::arg("g"), py::arg("k"), py::arg("p") = std::nullopt, py::arg("planar") = false);

    m.def(
        "generate",
        [](const std::string& model, int n, int d, int rows, int cols, int leaves, int k,
           int privates, std::uint64_t seed, pvc::Weight w_max) {
            pvc::GeneratorSpec spec;
            spec.model = pvc::GeneratorSpec::parse_model(model);
            spec.n = n;
            spec.d = d;
            spec.rows = rows;
            spec.cols = cols;
            spec.leaves = leaves;
            spec.k = k;
            spec.privates = privates;
            spec.seed = seed;
            spec.w_max = w_max;
            return pvc::generate(spec);
        },
        py::arg("model"), py::arg("n") = 0, py::arg("d") = 0, py::arg("rows") = 0,
        py::arg("cols") = 0, py::arg("leaves") = 0, py::arg("k") = 0, py::arg("privates") = 0,
        py::arg("seed") = 0, py::arg("w_max") = 1);

    m.def(
        "check_biclique",
        [](const pvc::WeightedGraph& g, const std::vector<std::string>& left,
           const std::vector<std::string>& right, int p) {
            return pvc::check_biclique(g, ids_of(g, left), ids_of(g, right), p);
        },
        py::arg("g"), py::arg("left"), py::arg("right"), py::arg("p"));

    m.def(
        "build_universal_set",
        [](int n, int l, const std::string& strategy, std::uint64_t seed, double delta,
           bool verify) {
            pvc::UsetStrategy s;
            if (strategy == "auto") {
                s = pvc::resolve_auto_strategy(n, l);
            } else if (strategy == "exhaustive") {
                s = pvc::UsetStrategy::exhaustive;
            } else if (strategy == "greedy") {
                s = pvc::UsetStrategy::greedy;
            } else if (strategy == "randomized") {
                s = pvc::UsetStrategy::randomized;
            } else {
                throw pvc::input_error("unknown strategy '" + strategy + "'");
            }
            auto family = pvc::build_universal_set(
                n, l, s,
                s == pvc::UsetStrategy::randomized ? std::optional<std::uint64_t>(seed)
                                                   : std::nullopt,
                s == pvc::UsetStrategy::randomized ? std::optional<double>(delta) : std::nullopt);
            std::optional<pvc::UsetWitness> witness;
            if (verify) witness = pvc::verify_universal(family);
            py::dict d;
            d["n"] = n;
            d["l"] = l;
            d["strategy"] = std::string(pvc::to_string(family.strategy()));
            d["size"] = family.size();
            switch (family.verified()) {
                case pvc::VerifyStatus::verified_true: d["verified"] = "true"; break;
                case pvc::VerifyStatus::verified_false: d["verified"] = "false"; break;
                case pvc::VerifyStatus::unverified: d["verified"] = "unverified"; break;
            }
            if (witness.has_value()) {
                d["witness"] = py::dict(py::arg("A") = witness->a, py::arg("B") = witness->b);
            }
            return d;
        },
        py::arg("n"), py::arg("l"), py::arg("strategy") = "auto", py::arg("seed") = 0,
        py::arg("delta") = 1e-3, py::arg("verify") = false);
}
