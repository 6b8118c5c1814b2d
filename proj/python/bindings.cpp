#include "tuza/approx.hpp"
#include "tuza/error.hpp"
#include "tuza/exact.hpp"
#include "tuza/graph.hpp"
#include "tuza/hardness.hpp"
#include "tuza/lp.hpp"
#include "tuza/report.hpp"
#include "tuza/sweep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tuza;

namespace {

py::object fraction(const Rational& q) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  py::object to_int = py::module_::import("builtins").attr("int");
  return Fraction(to_int(q.get_num().get_str()), to_int(q.get_den().get_str()));
}

py::list fractions(const std::vector<Rational>& qs) {
  py::list out;
  for (const auto& q : qs) out.append(fraction(q));
  return out;
}

// JSON reports cross over as Python objects; the Python layer turns the
// {"exact", "approx"} pairs into Fractions.
py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Rational to_rational(const py::handle& value) { return parse_rational(py::str(value)); }

py::list edge_pairs(const Graph& g, const std::vector<EdgeId>& edges) {
  py::list out;
  for (EdgeId e : edges) out.append(py::make_tuple(g.edge(e).u, g.edge(e).v));
  return out;
}

py::tuple vertex_tuple(const Target& t) {
  py::tuple out(t.vertices.size());
  for (std::size_t i = 0; i < t.vertices.size(); ++i) out[i] = t.vertices[i];
  return out;
}

Budget budget(std::uint64_t nodes, long ms) { return {nodes, std::chrono::milliseconds(ms)}; }

HardnessOptions hardness_options(std::uint64_t seed, bool solve_lp, bool run_exact, std::uint64_t nodes, long ms) {
  HardnessOptions opts;
  opts.seed = seed;
  opts.solve_lp = solve_lp;
  opts.run_exact = run_exact;
  opts.budget = budget(nodes, ms);
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Covering and packing triangles, cliques and odd cycles";

  py::register_exception<Error>(m, "TuzaError", PyExc_ValueError);

  const std::uint64_t kNodes = Budget{}.node_cap;
  const long kMs = Budget{}.time_cap.count();

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               py::list out;
                               for (const auto& e : g.edges()) out.append(py::make_tuple(e.u, e.v));
                               return out;
                             })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("to_edge_list", &Graph::to_edge_list)
      .def("__repr__", [](const Graph& g) {
        return "<tuza.Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("petersen_graph", &petersen_graph);
  m.def("gnp", [](std::size_t n, double p, std::uint64_t seed) { return generate(GnpSpec{n, p, seed}); },
        py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("bipartite_gnp",
        [](std::size_t left, std::size_t right, double p, std::uint64_t seed) {
          return generate(BipartiteGnpSpec{left, right, p, seed});
        },
        py::arg("left"), py::arg("right"), py::arg("p"), py::arg("seed"));
  m.def("multipartite", [](const std::vector<std::size_t>& parts) { return generate(MultipartiteSpec{parts}); },
        py::arg("parts"));
  m.def("blowup", [](const Graph& base, std::size_t t) { return generate(BlowupSpec{base, t}); }, py::arg("base"),
        py::arg("t"));
  m.def("density", [](const Graph& g) { return fraction(density(g)); });

  m.def("targets",
        [](const Graph& g, const std::string& family) {
          py::list out;
          for (const auto& t : enumerate_targets(g, TargetFamily::parse(family)).targets) out.append(vertex_tuple(t));
          return out;
        },
        py::arg("graph"), py::arg("family") = "K3");
  m.def("count_targets",
        [](const Graph& g, const std::string& family) { return enumerate_targets(g, TargetFamily::parse(family)).size(); },
        py::arg("graph"), py::arg("family") = "K3");

  m.def("fractional_cover",
        [](const Graph& g, const std::string& family) {
          TargetList targets = enumerate_targets(g, TargetFamily::parse(family));
          FractionalCover c = fractional_cover(g, targets);
          py::dict out;
          out["tau_star"] = fraction(c.value);
          out["nu_star"] = fraction(c.dual_packing.value);
          out["weights"] = fractions(c.weights);
          out["packing"] = fractions(c.dual_packing.weights);
          out["slackness_ok"] = check_slackness(targets, c, c.dual_packing).both_directions();
          return out;
        },
        py::arg("graph"), py::arg("family") = "K3");

  m.def("exact_cover",
        [](const Graph& g, const std::string& family, std::uint64_t nodes, long ms) {
          CoverSolution c = exact_cover(g, enumerate_targets(g, TargetFamily::parse(family)), budget(nodes, ms));
          py::dict out;
          out["size"] = c.size();
          out["optimal"] = c.optimal;
          out["edges"] = edge_pairs(g, c.edges);
          return out;
        },
        py::arg("graph"), py::arg("family") = "K3", py::arg("budget_nodes") = kNodes, py::arg("budget_ms") = kMs);

  m.def("exact_packing",
        [](const Graph& g, const std::string& family, std::uint64_t nodes, long ms) {
          TargetList targets = enumerate_targets(g, TargetFamily::parse(family));
          PackingSolution p = exact_packing(g, targets, budget(nodes, ms));
          py::dict out;
          out["size"] = p.size();
          out["optimal"] = p.optimal;
          py::list chosen;
          for (auto t : p.targets) chosen.append(vertex_tuple(targets.targets[t]));
          out["targets"] = chosen;
          return out;
        },
        py::arg("graph"), py::arg("family") = "K3", py::arg("budget_nodes") = kNodes, py::arg("budget_ms") = kMs);

  m.def("greedy_packing",
        [](const Graph& g, const std::string& family, std::uint64_t seed) {
          TargetList targets = enumerate_targets(g, TargetFamily::parse(family));
          py::list chosen;
          for (auto t : greedy_packing(targets, seed).targets) chosen.append(vertex_tuple(targets.targets[t]));
          return chosen;
        },
        py::arg("graph"), py::arg("family") = "K3", py::arg("seed") = 1);

  m.def("max_cut",
        [](const Graph& g, std::uint64_t nodes, long ms) {
          MaxCut c = max_cut_exact(g, budget(nodes, ms));
          return py::make_tuple(c.value, c.side, c.optimal);
        },
        py::arg("graph"), py::arg("budget_nodes") = kNodes, py::arg("budget_ms") = kMs);

  m.def("bipartize", [](const Graph& g, std::uint64_t seed) { return edge_pairs(g, bipartize(g, seed).removed); },
        py::arg("graph"), py::arg("seed") = 1);
  m.def("kpartition_cover",
        [](const Graph& g, int k, std::uint64_t seed) { return edge_pairs(g, kpartition_cover(g, k, seed).removed); },
        py::arg("graph"), py::arg("k"), py::arg("seed") = 1);

  m.def("cover_process",
        [](const Graph& g, int k, std::uint64_t seed) {
          ProcessResult r = kk_cover_process(g, k, seed);
          nlohmann::json j = to_json(g, r.cover);
          j["trace"] = to_json(g, r.trace);
          return from_json(j);
        },
        py::arg("graph"), py::arg("k") = 3, py::arg("seed") = 1);

  m.def("hardness",
        [](const Graph& g, const std::string& family, std::uint64_t seed, bool solve_lp, bool run_exact,
           std::uint64_t nodes, long ms) {
          TargetFamily fam = TargetFamily::parse(family);
          HardnessReport r = hardness_interval(g, fam, hardness_options(seed, solve_lp, run_exact, nodes, ms));
          nlohmann::json j = to_json(r);
          if (r.cover && r.m > 0 && fam.is_triangle()) {
            j["case"] = to_json(classify_case(*r.cover, r.beta, delta_of_beta(r.beta)));
          }
          return from_json(j);
        },
        py::arg("graph"), py::arg("family") = "K3", py::arg("seed") = 1, py::arg("solve_lp") = true,
        py::arg("run_exact") = true, py::arg("budget_nodes") = kNodes, py::arg("budget_ms") = kMs);

  m.def("witness",
        [](const Graph& h, const py::object& beta, std::uint64_t seed, std::size_t retries) {
          BipartiteWitness w = find_bipartite_witness(h, TargetFamily::triangles(), to_rational(beta), seed, retries);
          nlohmann::json j = to_json(h, w);
          j["verified"] = verify_witness(h, w, true);
          return from_json(j);
        },
        py::arg("h"), py::arg("beta"), py::arg("seed") = 1, py::arg("retries") = 32);

  m.def("verify_main",
        [](const Graph& g, std::uint64_t seed, bool solve_lp, bool run_exact_packing) {
          MainBoundOptions opts;
          opts.hardness.seed = seed;
          opts.hardness.solve_lp = solve_lp;
          opts.hardness.run_exact = solve_lp;
          opts.run_exact_packing = run_exact_packing;
          return from_json(to_json(verify_main_bound(g, opts)));
        },
        py::arg("graph"), py::arg("seed") = 1, py::arg("solve_lp") = true, py::arg("run_exact_packing") = true);

  m.def("rho",
        [](const Graph& g, std::uint64_t seed) {
          HardnessOptions opts;
          opts.seed = seed;
          return from_json(to_json(rho_report(g, opts)));
        },
        py::arg("graph"), py::arg("seed") = 1);

  m.def("sweep_csv",
        [](const std::string& config) {
          std::vector<InstanceRecord> records;
          {
            py::gil_scoped_release release;
            records = run_sweep(SweepConfig::from_json(nlohmann::json::parse(config)));
          }
          return to_csv(records);
        },
        py::arg("config"));
  m.def("load_csv", [](const std::string& text) { return load_csv(text).size(); }, py::arg("text"));
}
