#include "tuza/hardness.hpp"

#include "tuza/error.hpp"
#include "tuza/rng.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace tuza {

namespace {

Rational rational(std::size_t x) { return Rational(static_cast<unsigned long>(x)); }

struct Candidate {
  std::vector<EdgeId> edges;
  std::string source;
};

}  // namespace

int hardness_divisor(const TargetFamily& family) { return family.partite_bound(); }

Rational hardness_delta(const Rational& tau, std::size_t m, const TargetFamily& family) {
  if (m == 0) return 1;
  return 1 - tau * hardness_divisor(family) / rational(m);
}

HardnessReport hardness_interval(const Graph& g, const TargetFamily& family, const HardnessOptions& options) {
  HardnessReport report;
  report.family = family;
  report.n = g.n();
  report.m = g.m();
  report.beta = g.n() == 0 ? Rational(0) : density(g);

  TargetList targets = enumerate_targets(g, family);
  report.targets = targets.size();

  if (options.solve_lp) {
    report.cover = fractional_cover(g, targets, options.lp);
    report.tau_star = report.cover->value;
  }

  std::vector<Candidate> candidates;
  if (options.run_exact) {
    CoverSolution exact = exact_cover(g, targets, options.budget);
    if (exact.optimal) report.tau_exact = exact.size();
    candidates.push_back({exact.edges, exact.optimal ? "exact" : "exact-incumbent"});
  }
  if (family.kind() == TargetKind::Clique) {
    candidates.push_back({kpartition_cover(g, family.k(), options.seed).removed,
                          family.k() == 3 ? "bipartize" : "kpartition"});
    if (options.run_process && options.solve_lp) {
      candidates.push_back({kk_cover_process(g, family.k(), options.seed, options.lp).cover.edges,
                            "deletion-process"});
    }
  } else {
    candidates.push_back({bipartize(g, options.seed).removed, "bipartize"});
  }

  const Candidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.edges.size() < best->edges.size()) best = &c;
  }
  ensure(verify_cover(g, family, best->edges), "best cover candidate misses a target");
  report.best_cover = best->edges;
  report.tau_upper = best->edges.size();
  report.tau_upper_source = best->source;

  report.tau_lower = 0;
  if (report.tau_star) report.tau_lower = Rational(ceil(*report.tau_star));
  if (report.tau_exact) report.tau_lower = std::max(report.tau_lower, rational(*report.tau_exact));
  ensure(report.tau_lower <= rational(report.tau_upper), "tau lower bound exceeds the best cover");

  report.delta_hi = hardness_delta(report.tau_lower, report.m, family);
  report.delta_lo = hardness_delta(rational(report.tau_upper), report.m, family);
  return report;
}

// ---------------------------------------------------------------------------

std::string to_string(ProofCase c) {
  switch (c) {
    case ProofCase::Case1: return "Case1";
    case ProofCase::Case2: return "Case2";
    case ProofCase::Case3: return "Case3";
  }
  return "?";
}

CaseLabel classify_case(const std::vector<Rational>& cover_weights, const Rational& beta, const Rational& delta) {
  if (sgn(beta) <= 0 || beta > Rational(1, 2)) {
    throw Error(ErrorKind::InvalidSpec, "beta " + to_string(beta) + " outside (0, 1/2]");
  }
  if (sgn(delta) < 0 || delta > 1) throw Error(ErrorKind::InvalidSpec, "delta outside [0, 1]");

  CaseLabel out;
  out.m = cover_weights.size();
  out.beta = beta;
  out.delta = delta;
  const auto classes = support_classes(cover_weights, Rational(1));
  out.f0 = classes.zero.size();
  out.f1 = classes.heavy.size();

  const Rational beta_sq = beta * beta;
  const Rational m = rational(out.m);
  out.case1_threshold = (delta + beta_sq / 800) * m / 2;
  out.case2_threshold = (1 - 3 * beta_sq / 800) * m / 4;

  if (rational(out.f1) > out.case1_threshold) {
    out.label = ProofCase::Case1;
    out.reason = "|F1| = " + std::to_string(out.f1) + " > " + to_string(out.case1_threshold);
  } else if (rational(out.f0) < out.case2_threshold) {
    out.label = ProofCase::Case2;
    out.reason = "|F0| = " + std::to_string(out.f0) + " < " + to_string(out.case2_threshold);
  } else {
    out.label = ProofCase::Case3;
    out.reason = "|F0| = " + std::to_string(out.f0) + " >= " + to_string(out.case2_threshold) + " and |F1| = " +
                 std::to_string(out.f1) + " <= " + to_string(out.case1_threshold);
  }
  return out;
}

CaseLabel classify_case(const FractionalCover& cover, const Rational& beta, const Rational& delta) {
  return classify_case(cover.weights, beta, delta);
}

// ---------------------------------------------------------------------------

Graph zero_weight_subgraph(const Graph& g, const std::vector<Rational>& cover_weights) {
  std::vector<bool> keep(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) keep[e] = sgn(cover_weights.at(e)) == 0;
  return g.spanning_subgraph(keep).first;
}

BipartiteWitness find_bipartite_witness(const Graph& h, const TargetFamily& family, const Rational& beta,
                                        std::uint64_t seed, std::size_t retries) {
  if (sgn(beta) <= 0) throw Error(ErrorKind::InvalidSpec, "beta must be positive");
  if (retries == 0) throw Error(ErrorKind::InvalidSpec, "retries must be positive");
  if (has_target(h, family)) {
    throw Error(ErrorKind::NotTargetFree, "zero-weight subgraph contains a " + family.name());
  }
  const std::size_t n = h.n();
  const Rational n_q = rational(n);
  const Rational m_ref = beta * n_q * n_q;
  const Rational threshold = beta * beta * m_ref / 500;
  const Rational min_degree = Rational(31, 250) * beta * n_q;  // 0.124·β·n

  // Peel to H': repeatedly drop vertices of degree below 0.124·β·n.
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = h.degree(v);
    if (rational(degree[v]) < min_degree) {
      alive[v] = false;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : h.neighbors(v)) {
      if (!alive[w]) continue;
      if (rational(--degree[w]) < min_degree) {
        alive[w] = false;
        stack.push_back(w);
      }
    }
  }
  const auto kept = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
  if (kept == 0) throw Error(ErrorKind::InsufficientDensity, "no vertex survives degree peeling");

  const std::size_t c = std::min<std::size_t>(n, ceil(Rational(250, 31) / beta).get_ui());
  Rng rng(seed);
  std::vector<Vertex> pool(n);
  std::vector<bool> sampled(n);
  std::vector<std::optional<Vertex>> dominator(n);

  BipartiteWitness best;
  best.threshold = threshold;
  best.peeled_vertices = kept;
  best.sample_size = c;
  best.seed = seed;
  bool have_best = false;

  for (std::size_t attempt = 1; attempt <= retries; ++attempt) {
    std::iota(pool.begin(), pool.end(), Vertex{0});
    std::fill(sampled.begin(), sampled.end(), false);
    for (std::size_t i = 0; i < c; ++i) {
      std::swap(pool[i], pool[i + rng.below(n - i)]);
      sampled[pool[i]] = true;
    }
    // H'': vertices of H' with a neighbor (in H') in the sample; each joins the
    // class of its lowest-index dominating sample vertex.
    for (Vertex x = 0; x < n; ++x) {
      dominator[x].reset();
      if (!alive[x]) continue;
      for (Vertex y : h.neighbors(x)) {
        if (alive[y] && sampled[y]) {
          dominator[x] = y;
          break;
        }
      }
    }
    std::map<std::pair<Vertex, Vertex>, std::size_t> between;
    for (const Edge& e : h.edges()) {
      const auto& du = dominator[e.u];
      const auto& dv = dominator[e.v];
      if (!du || !dv || *du == *dv) continue;
      ++between[{std::min(*du, *dv), std::max(*du, *dv)}];
    }
    if (between.empty()) continue;
    auto top = between.begin();
    for (auto it = between.begin(); it != between.end(); ++it) {
      if (it->second > top->second) top = it;
    }

    if (!have_best || top->second > best.size()) {
      have_best = true;
      best.u = top->first.first;
      best.w = top->first.second;
      best.a.clear();
      best.b.clear();
      for (Vertex x = 0; x < n; ++x) {
        if (dominator[x] == best.u) best.a.push_back(x);
        if (dominator[x] == best.w) best.b.push_back(x);
      }
      best.crossing.clear();
      for (EdgeId e = 0; e < h.m(); ++e) {
        const auto& du = dominator[h.edge(e).u];
        const auto& dv = dominator[h.edge(e).v];
        if (du && dv && ((*du == best.u && *dv == best.w) || (*du == best.w && *dv == best.u))) {
          best.crossing.push_back(e);
        }
      }
    }
    best.attempts = attempt;
    best.threshold_met = rational(best.size()) >= threshold;
    if (best.threshold_met) break;
  }
  if (!have_best) best.attempts = retries;
  return best;
}

bool verify_witness(const Graph& h, const BipartiteWitness& witness, bool independent_classes) {
  std::vector<int> cls(h.n(), 0);
  for (Vertex x : witness.a) cls.at(x) |= 1;
  for (Vertex x : witness.b) cls.at(x) |= 2;
  if (std::any_of(cls.begin(), cls.end(), [](int c) { return c == 3; })) return false;
  if (!witness.a.empty() && (cls.at(witness.u) & 1)) return false;
  if (!witness.b.empty() && (cls.at(witness.w) & 2)) return false;
  for (Vertex x : witness.a) {
    if (!h.adjacent(witness.u, x)) return false;
  }
  for (Vertex x : witness.b) {
    if (!h.adjacent(witness.w, x)) return false;
  }
  std::vector<EdgeId> crossing;
  for (EdgeId e = 0; e < h.m(); ++e) {
    int cu = cls[h.edge(e).u];
    int cv = cls[h.edge(e).v];
    if ((cu | cv) == 3 && cu != cv) crossing.push_back(e);
    if (independent_classes && cu == cv && cu != 0) return false;
  }
  return crossing == witness.crossing;
}

bool light_paths_absent(const Graph& g, const std::vector<Rational>& cover_weights,
                        const BipartiteWitness& witness, int k) {
  if (k < 3) throw Error(ErrorKind::InvalidSpec, "k must be >= 3");
  const Rational threshold(1, static_cast<unsigned long>(k - 2));
  const auto path_edges = static_cast<std::size_t>(k - 2);

  for (const auto* cls : {&witness.a, &witness.b}) {
    std::vector<bool> member(g.n(), false);
    for (Vertex x : *cls) member[x] = true;
    std::vector<bool> on_path(g.n(), false);
    // Depth-first search for a simple path with `path_edges` light edges.
    std::function<bool(Vertex, std::size_t)> extend = [&](Vertex v, std::size_t length) {
      if (length == path_edges) return true;
      on_path[v] = true;
      const auto& nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        Vertex w = nb[i];
        if (!member[w] || on_path[w] || cover_weights[g.incident_edges(v)[i]] >= threshold) continue;
        if (extend(w, length + 1)) {
          on_path[v] = false;
          return true;
        }
      }
      on_path[v] = false;
      return false;
    };
    for (Vertex x : *cls) {
      if (extend(x, 0) && path_edges > 0) return false;
    }
  }
  return true;
}

bool Case3Cut::refutes_hardness(const Rational& delta, std::size_t m) const {
  return rational(cut.removed_count()) < (1 - delta) * rational(m) / 2;
}

Case3Cut case3_cut(const Graph& g, const BipartiteWitness& witness, std::uint64_t seed, std::size_t retries) {
  if (retries == 0) throw Error(ErrorKind::InvalidSpec, "retries must be positive");
  std::vector<int> cls(g.n(), 0);
  for (Vertex x : witness.a) cls.at(x) = 1;
  for (Vertex x : witness.b) cls.at(x) = 2;

  Case3Cut out;
  out.seed = seed;
  for (const Edge& e : g.edges()) {
    int cu = cls[e.u];
    int cv = cls[e.v];
    if (cu == 1 && cv == 1) ++out.inside_a;
    else if (cu == 2 && cv == 2) ++out.inside_b;
    else if ((cu | cv) == 3) ++out.between;
  }
  const Rational m = rational(g.m());
  const Rational beta = g.n() == 0 ? Rational(0) : density(g);
  out.target = m / 2 + m * beta * beta / 1600;

  Rng rng(seed);
  std::vector<std::uint32_t> part(g.n());
  bool have = false;
  for (std::size_t attempt = 1; attempt <= retries; ++attempt) {
    for (Vertex v = 0; v < g.n(); ++v) {
      part[v] = cls[v] == 1 ? 0 : cls[v] == 2 ? 1 : static_cast<std::uint32_t>(rng.coin());
    }
    auto removed = same_part_edges(g, part);
    if (!have || removed.size() < out.cut.removed.size()) {
      have = true;
      out.cut.part = part;
      out.cut.parts = 2;
      out.cut.removed = std::move(removed);
    }
    out.attempts = attempt;
  }
  out.crossing = g.m() - out.cut.removed_count();
  out.target_met = rational(out.crossing) >= out.target;
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Met: return "met";
    case Hypothesis::Unmet: return "unmet";
    case Hypothesis::Undetermined: return "undetermined";
  }
  return "?";
}

Rational delta_of_beta(const Rational& beta) { return beta * beta / 3200; }

MainBoundCheck verify_main_bound(const Graph& g, const MainBoundOptions& options) {
  const TargetFamily family = TargetFamily::triangles();
  MainBoundCheck check;
  check.n = g.n();
  check.m = g.m();
  check.beta = density(g);
  ensure(check.beta <= Rational(1, 2), "simple graph with beta > 1/2");
  const Rational m = rational(g.m());
  check.rhs = (1 + check.beta * check.beta / 800) * m / 4;
  check.delta_beta = delta_of_beta(check.beta);

  TargetList targets = enumerate_targets(g, family);
  auto consider = [&](const PackingSolution& p, const std::string& source, bool optimal) {
    if (p.size() > check.nu_lower || (p.size() == check.nu_lower && optimal && !check.nu_optimal) ||
        check.nu_source.empty()) {
      check.nu_lower = p.size();
      check.nu_source = source;
      check.nu_optimal = optimal;
    }
  };
  if (auto decomposition = complete_graph_decomposition(g, targets)) {
    // ν ≤ m/3 always, so a decomposition using every edge is optimal.
    consider(*decomposition, "decomposition", 3 * decomposition->size() == g.m());
  }
  if (!check.nu_optimal && options.run_exact_packing) {
    PackingSolution exact = exact_packing(g, targets, options.packing_budget);
    consider(exact, exact.optimal ? "exact" : "exact-incumbent", exact.optimal);
  }
  if (!check.nu_optimal) consider(greedy_packing(targets, options.hardness.seed), "greedy", false);
  check.nu_passes = rational(check.nu_lower) >= check.rhs;

  check.hardness = hardness_interval(g, family, options.hardness);
  if (check.hardness.tau_star) {
    check.tau_star = check.hardness.tau_star;
    check.tau_star_passes = *check.tau_star >= check.rhs;
  }
  if (check.hardness.delta_hi <= check.delta_beta) {
    check.hypothesis = Hypothesis::Met;
  } else if (check.hardness.delta_lo > check.delta_beta) {
    check.hypothesis = Hypothesis::Unmet;
  } else {
    check.hypothesis = Hypothesis::Undetermined;
  }
  return check;
}

RhoReport rho_report(const Graph& g, const HardnessOptions& options) {
  RhoReport report;
  report.hardness = hardness_interval(g, TargetFamily::triangles(), options);
  const auto& h = report.hardness;
  report.m = g.m();
  report.rho_lo = g.m() - h.tau_upper;
  report.rho_hi = g.m() - floor(h.tau_lower).get_ui();
  const Rational m = rational(g.m());
  if (h.tau_star) {
    report.rho_star = m - *h.tau_star;
    if (g.m() == 0) {
      report.gap_lo = report.gap_hi = Rational(1);
    } else {
      if (report.rho_hi > 0) report.gap_lo = *report.rho_star / rational(report.rho_hi);
      if (report.rho_lo > 0) report.gap_hi = *report.rho_star / rational(report.rho_lo);
    }
  }

  const Rational beta = g.n() == 0 ? Rational(0) : density(g);
  const Rational delta = delta_of_beta(beta);
  const Rational hard_bound = Rational(3, 2) - beta * beta / 1600;
  const Rational soft_bound = Rational(3, 2) - delta / (1 + delta);
  const Rational ceiling = (1 - delta) * m / 2;
  if (h.tau_lower >= ceiling && g.m() > 0) {
    report.gap_branch = "hard";
    report.gap_bound = hard_bound;
  } else if (rational(h.tau_upper) < ceiling || g.m() == 0) {
    report.gap_branch = "not-hard";
    report.gap_bound = soft_bound;
  } else {
    report.gap_branch = "undetermined";
    report.gap_bound = std::max(hard_bound, soft_bound);
  }
  return report;
}

bool rho_relaxation_feasible(const TargetList& triangles, const std::vector<Rational>& weights) {
  if (!triangles.family.is_triangle() || weights.size() != triangles.edge_count) return false;
  for (const auto& w : weights) {
    if (sgn(w) < 0 || w > 1) return false;
  }
  for (const auto& t : triangles.targets) {
    Rational s = 0;
    for (EdgeId e : t.edges) s += weights[e];
    if (s > 2) return false;
  }
  return true;
}

}  // namespace tuza
