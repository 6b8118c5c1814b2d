#include "tuza/approx.hpp"

#include "tuza/error.hpp"
#include "tuza/rng.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tuza {

std::vector<EdgeId> same_part_edges(const Graph& g, const std::vector<std::uint32_t>& part) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (part[g.edge(e).u] == part[g.edge(e).v]) out.push_back(e);
  }
  return out;
}

CutResult partition_cover(const Graph& g, std::uint32_t parts, std::uint64_t seed) {
  if (parts < 2) throw Error(ErrorKind::InvalidSpec, "need at least 2 parts");
  Rng rng(seed);
  CutResult out;
  out.parts = parts;
  out.part.resize(g.n());
  for (auto& p : out.part) p = static_cast<std::uint32_t>(rng.below(parts));

  // Every improving move raises the number of crossing edges, so m + 1
  // passes always suffice; the 100·n figure only matters for sparse inputs.
  const std::size_t pass_cap = std::max<std::size_t>(100 * g.n(), g.m() + 1);
  std::vector<std::size_t> count(parts);
  for (std::size_t pass = 0; pass < pass_cap; ++pass) {
    bool moved = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      std::fill(count.begin(), count.end(), 0);
      for (Vertex w : g.neighbors(v)) ++count[out.part[w]];
      auto best = static_cast<std::uint32_t>(std::min_element(count.begin(), count.end()) - count.begin());
      if (count[best] < count[out.part[v]]) {
        out.part[v] = best;
        moved = true;
      }
    }
    if (!moved) break;
  }
  out.removed = same_part_edges(g, out.part);
  ensure(out.removed.size() <= g.m() / parts, "local search left more than m/parts same-part edges");
  return out;
}

CutResult bipartize(const Graph& g, std::uint64_t seed) { return partition_cover(g, 2, seed); }

CutResult kpartition_cover(const Graph& g, int k, std::uint64_t seed) {
  if (k < 3) throw Error(ErrorKind::InvalidSpec, "k must be >= 3");
  return partition_cover(g, static_cast<std::uint32_t>(k - 1), seed);
}

ProcessResult kk_cover_process(const Graph& g, int k, std::uint64_t seed, const LpOptions& lp) {
  const TargetFamily family = TargetFamily::clique(k);
  const long q = mantel_bound(k);
  const auto zero_needed = static_cast<std::size_t>(family.edges_per_target() - q);
  const Rational min_weight(1, static_cast<unsigned long>(q));

  ProcessResult result;
  ProcessTrace& trace = result.trace;
  trace.k = k;
  trace.seed = seed;
  trace.mantel = q;
  trace.zero_threshold = zero_needed;

  std::vector<bool> active(g.m(), true);
  bool first = true;
  while (true) {
    auto [current, to_input] = g.spanning_subgraph(active);
    TargetList targets = enumerate_targets(current, family);
    FractionalCover f = fractional_cover(current, targets, lp);
    if (first) {
      trace.initial_lp = f.value;
      first = false;
    }

    std::optional<std::uint32_t> qualifying;
    for (std::uint32_t t = 0; t < targets.size() && !qualifying; ++t) {
      std::size_t zeros = 0;
      for (EdgeId e : targets.targets[t].edges) zeros += sgn(f.weights[e]) == 0 ? 1 : 0;
      if (zeros >= zero_needed) qualifying = t;
    }

    if (qualifying) {
      const auto& edges = targets.targets[*qualifying].edges;
      EdgeId heaviest = edges.front();
      for (EdgeId e : edges) {
        if (f.weights[e] > f.weights[heaviest]) heaviest = e;
      }
      ensure(f.weights[heaviest] >= min_weight, "qualifying clique has no edge of weight >= 1/floor(k^2/4)");
      trace.steps.push_back({to_input[heaviest], f.weights[heaviest], f.value, *qualifying});
      active[to_input[heaviest]] = false;
      continue;
    }

    // Halted: G_t has no K_k with zero_needed zero-weight edges.
    trace.halting_verified = true;
    trace.final_lp = f.value;
    trace.final_edges = current.m();
    std::vector<bool> positive(current.m(), false);
    for (EdgeId e = 0; e < current.m(); ++e) {
      if (sgn(f.weights[e]) > 0) {
        positive[e] = true;
        trace.positive_edges.push_back(to_input[e]);
      } else {
        ++trace.final_zero_edges;
      }
    }
    trace.zero_fraction = current.m() == 0
                              ? Rational(0)
                              : Rational(static_cast<unsigned long>(trace.final_zero_edges),
                                         static_cast<unsigned long>(current.m()));
    trace.zero_fraction.canonicalize();

    auto [p_graph, p_to_current] = current.spanning_subgraph(positive);
    CutResult cut = bipartize(p_graph, seed);
    for (EdgeId e : cut.removed) trace.bipartization.push_back(to_input[p_to_current[e]]);
    break;
  }

  CoverSolution& cover = result.cover;
  cover.family = family;
  for (const auto& step : trace.steps) cover.edges.push_back(step.edge);
  cover.edges.insert(cover.edges.end(), trace.bipartization.begin(), trace.bipartization.end());
  std::sort(cover.edges.begin(), cover.edges.end());

  trace.ratio_bound = trace.mantel * trace.initial_lp;
  if (sgn(trace.initial_lp) > 0) {
    trace.achieved_ratio = Rational(static_cast<unsigned long>(cover.size())) / trace.initial_lp;
  }
  ensure(verify_cover(g, family, cover.edges), "deletion process returned a cover that misses a " + family.name());
  ensure(Rational(static_cast<unsigned long>(cover.size())) <= trace.ratio_bound,
         "deletion process cover exceeds floor(k^2/4) * tau*");
  return result;
}

PackingSolution greedy_packing(const TargetList& targets, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint32_t> order(targets.size());
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(std::span<std::uint32_t>(order));

  PackingSolution out;
  out.family = targets.family;
  std::vector<bool> used(targets.edge_count, false);
  for (auto t : order) {
    const auto& edges = targets.targets[t].edges;
    if (std::any_of(edges.begin(), edges.end(), [&](EdgeId e) { return used[e]; })) continue;
    for (EdgeId e : edges) used[e] = true;
    out.targets.push_back(t);
  }
  std::sort(out.targets.begin(), out.targets.end());
  return out;
}

std::optional<std::vector<std::array<Vertex, 3>>> steiner_triple_system(std::size_t n) {
  std::vector<std::array<Vertex, 3>> triples;
  auto add = [&](Vertex a, Vertex b, Vertex c) { triples.push_back({a, b, c}); };

  if (n % 6 == 3) {
    // Bose: points (x, i), x ∈ Z_{2s+1}, i ∈ Z_3, with the idempotent
    // commutative quasigroup x∘y = (x+y)/2 mod 2s+1.
    const std::size_t order = n / 3;
    auto point = [&](std::size_t x, std::size_t i) { return static_cast<Vertex>((i % 3) * order + x); };
    auto op = [&](std::size_t x, std::size_t y) { return (x + y) * ((order + 1) / 2) % order; };
    for (std::size_t x = 0; x < order; ++x) add(point(x, 0), point(x, 1), point(x, 2));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t x = 0; x < order; ++x) {
        for (std::size_t y = x + 1; y < order; ++y) add(point(x, i), point(y, i), point(op(x, y), i + 1));
      }
    }
  } else if (n % 6 == 1 && n >= 7) {
    // Skolem: ∞ plus points (x, i), x ∈ [0, 2s), i ∈ Z_3, with a half-idempotent
    // commutative quasigroup of order 2s (relabelled Z_{2s} addition).
    const std::size_t order = (n - 1) / 3;
    const std::size_t half = order / 2;
    const auto infinity = static_cast<Vertex>(n - 1);
    auto point = [&](std::size_t x, std::size_t i) { return static_cast<Vertex>((i % 3) * order + x); };
    auto op = [&](std::size_t x, std::size_t y) {
      std::size_t sum = (x + y) % order;
      return sum % 2 == 0 ? sum / 2 : half + (sum - 1) / 2;
    };
    for (std::size_t x = 0; x < half; ++x) add(point(x, 0), point(x, 1), point(x, 2));
    for (std::size_t x = 0; x < half; ++x) {
      for (std::size_t i = 0; i < 3; ++i) add(infinity, point(x + half, i), point(x, i + 1));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t x = 0; x < order; ++x) {
        for (std::size_t y = x + 1; y < order; ++y) add(point(x, i), point(y, i), point(op(x, y), i + 1));
      }
    }
  } else if (n <= 1) {
    return triples;
  } else {
    return std::nullopt;
  }
  for (auto& t : triples) std::sort(t.begin(), t.end());
  return triples;
}

std::optional<PackingSolution> complete_graph_decomposition(const Graph& g, const TargetList& targets) {
  if (!targets.family.is_triangle() || !g.is_complete()) return std::nullopt;
  auto system = steiner_triple_system(g.n());
  if (!system) return std::nullopt;
  std::map<std::array<Vertex, 3>, std::uint32_t> index;
  for (std::uint32_t t = 0; t < targets.size(); ++t) {
    const auto& v = targets.targets[t].vertices;
    index[{v[0], v[1], v[2]}] = t;
  }
  PackingSolution out;
  out.family = targets.family;
  for (const auto& triple : *system) out.targets.push_back(index.at(triple));
  std::sort(out.targets.begin(), out.targets.end());
  ensure(verify_packing(g, targets, out.targets), "Steiner triple system is not edge-disjoint");
  return out;
}

}  // namespace tuza
