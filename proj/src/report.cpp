#include "tuza/report.hpp"

namespace tuza {

using nlohmann::json;

namespace {

template <class T>
json optional_rational(const std::optional<T>& q) {
  return q ? rational_json(*q) : json(nullptr);
}

}  // namespace

json rational_json(const Rational& q) { return {{"exact", to_string(q)}, {"approx", to_double(q)}}; }

json edges_json(const Graph& g, const std::vector<EdgeId>& edges) {
  json out = json::array();
  for (EdgeId e : edges) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

json to_json(const Graph& g) {
  std::vector<EdgeId> all(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) all[e] = e;
  return {{"n", g.n()}, {"m", g.m()}, {"edges", edges_json(g, all)}};
}

json to_json(const Graph& g, const FractionalCover& cover, const TargetList& targets,
             const EdgeClassification& classes) {
  json weights = json::array();
  for (EdgeId e = 0; e < g.m(); ++e) {
    weights.push_back({{"edge", {g.edge(e).u, g.edge(e).v}}, {"weight", to_string(cover.weights[e])}});
  }
  json packing = json::array();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (cover.dual_packing.weights[t] == 0) continue;
    packing.push_back({{"vertices", targets.targets[t].vertices}, {"weight", to_string(cover.dual_packing.weights[t])}});
  }
  return {{"family", cover.family.name()},
          {"n", g.n()},
          {"m", g.m()},
          {"targets", targets.size()},
          {"tau_star", rational_json(cover.value)},
          {"nu_star", rational_json(cover.dual_packing.value)},
          {"pivots", cover.pivots},
          {"theta", rational_json(classes.threshold)},
          {"f0", classes.zero.size()},
          {"f_theta", classes.heavy.size()},
          {"f_middle", classes.middle.size()},
          {"edge_weights", weights},
          {"packing_support", packing}};
}

json to_json(const Graph& g, const CoverSolution& cover) {
  return {{"family", cover.family.name()},
          {"size", cover.size()},
          {"optimal", cover.optimal},
          {"nodes", cover.nodes},
          {"edges", edges_json(g, cover.edges)}};
}

json to_json(const TargetList& targets, const PackingSolution& packing) {
  json chosen = json::array();
  for (auto t : packing.targets) chosen.push_back(targets.targets[t].vertices);
  return {{"family", packing.family.name()},
          {"size", packing.size()},
          {"optimal", packing.optimal},
          {"nodes", packing.nodes},
          {"targets", chosen}};
}

json to_json(const Graph& g, const CutResult& cut) {
  return {{"parts", cut.parts},
          {"assignment", cut.part},
          {"removed_count", cut.removed_count()},
          {"crossing", cut.crossing(g)},
          {"removed", edges_json(g, cut.removed)}};
}

json to_json(const Graph& g, const ProcessTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"edge", {g.edge(s.edge).u, g.edge(s.edge).v}},
                     {"weight", rational_json(s.weight)},
                     {"lp_value", rational_json(s.lp_value)},
                     {"witness", s.witness}});
  }
  return {{"k", trace.k},
          {"seed", trace.seed},
          {"mantel", rational_json(trace.mantel)},
          {"zero_threshold", trace.zero_threshold},
          {"initial_lp", rational_json(trace.initial_lp)},
          {"final_lp", rational_json(trace.final_lp)},
          {"t", trace.t()},
          {"steps", steps},
          {"final_edges", trace.final_edges},
          {"final_zero_edges", trace.final_zero_edges},
          {"zero_fraction", rational_json(trace.zero_fraction)},
          {"positive_edges", edges_json(g, trace.positive_edges)},
          {"bipartization", edges_json(g, trace.bipartization)},
          {"ratio_bound", rational_json(trace.ratio_bound)},
          {"achieved_ratio", optional_rational(trace.achieved_ratio)},
          {"halting_verified", trace.halting_verified}};
}

json to_json(const HardnessReport& r) {
  return {{"family", r.family.name()},
          {"n", r.n},
          {"m", r.m},
          {"beta", rational_json(r.beta)},
          {"targets", r.targets},
          {"tau_star", optional_rational(r.tau_star)},
          {"tau_exact", r.tau_exact ? json(*r.tau_exact) : json(nullptr)},
          {"tau_lower", rational_json(r.tau_lower)},
          {"tau_upper", r.tau_upper},
          {"tau_upper_source", r.tau_upper_source},
          {"delta_interval", {rational_json(r.delta_lo), rational_json(r.delta_hi)}}};
}

json to_json(const CaseLabel& c) {
  return {{"label", to_string(c.label)},
          {"m", c.m},
          {"f0", c.f0},
          {"f1", c.f1},
          {"beta", rational_json(c.beta)},
          {"delta", rational_json(c.delta)},
          {"case1_threshold", rational_json(c.case1_threshold)},
          {"case2_threshold", rational_json(c.case2_threshold)},
          {"reason", c.reason}};
}

json to_json(const Graph& h, const BipartiteWitness& w) {
  return {{"a", w.a},
          {"b", w.b},
          {"u", w.u},
          {"w", w.w},
          {"size", w.size()},
          {"crossing", edges_json(h, w.crossing)},
          {"threshold", rational_json(w.threshold)},
          {"threshold_met", w.threshold_met},
          {"peeled_vertices", w.peeled_vertices},
          {"sample_size", w.sample_size},
          {"attempts", w.attempts},
          {"seed", w.seed}};
}

json to_json(const Case3Cut& c) {
  return {{"assignment", c.cut.part},
          {"removed_count", c.cut.removed_count()},
          {"crossing", c.crossing},
          {"between", c.between},
          {"inside_a", c.inside_a},
          {"inside_b", c.inside_b},
          {"target", rational_json(c.target)},
          {"target_met", c.target_met},
          {"attempts", c.attempts},
          {"seed", c.seed}};
}

json to_json(const MainBoundCheck& c) {
  return {{"n", c.n},
          {"m", c.m},
          {"beta", rational_json(c.beta)},
          {"rhs", rational_json(c.rhs)},
          {"nu_lower", c.nu_lower},
          {"nu_source", c.nu_source},
          {"nu_optimal", c.nu_optimal},
          {"nu_passes", c.nu_passes},
          {"tau_star", optional_rational(c.tau_star)},
          {"tau_star_passes", c.tau_star_passes ? json(*c.tau_star_passes) : json(nullptr)},
          {"delta_beta", rational_json(c.delta_beta)},
          {"hypothesis", to_string(c.hypothesis)},
          {"hardness", to_json(c.hardness)}};
}

json to_json(const RhoReport& r) {
  return {{"m", r.m},
          {"rho", {r.rho_lo, r.rho_hi}},
          {"rho_star", optional_rational(r.rho_star)},
          {"gap", {optional_rational(r.gap_lo), optional_rational(r.gap_hi)}},
          {"gap_bound", rational_json(r.gap_bound)},
          {"gap_branch", r.gap_branch},
          {"hardness", to_json(r.hardness)}};
}

}  // namespace tuza
