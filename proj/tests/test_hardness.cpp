#include "oracles.hpp"

#include "tuza/error.hpp"
#include "tuza/hardness.hpp"

#include <doctest.h>

using namespace tuza;

namespace {

Rational r(std::size_t x) { return Rational(static_cast<unsigned long>(x)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected tuza::Error");
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("hardness interval examples") {
  HardnessReport k6 = hardness_interval(complete_graph(6), TargetFamily::triangles());
  CHECK(k6.tau_exact == std::optional<std::size_t>(6));
  CHECK(k6.tau_upper == 6);
  CHECK(k6.delta_lo == Rational(1, 5));
  CHECK(k6.delta_hi == Rational(1, 5));

  HardnessReport free = hardness_interval(generate(MultipartiteSpec{{3, 4}}), TargetFamily::triangles());
  CHECK(free.tau_upper == 0);
  CHECK(free.delta_lo == 1);

  HardnessReport tri = hardness_interval(complete_graph(3), TargetFamily::triangles());
  CHECK(tri.tau_upper == 1);
  CHECK(tri.delta_hi == Rational(1, 3));

  CHECK(hardness_delta(0, 0, TargetFamily::triangles()) == 1);
  CHECK(hardness_divisor(TargetFamily::clique(5)) == 4);
  CHECK(hardness_divisor(TargetFamily::odd_cycle(5)) == 2);
}

TEST_CASE("hardness interval brackets the oracle over the corpus") {
  for (const auto& [name, g] : oracle::small_corpus()) {
    for (TargetFamily fam : {TargetFamily::triangles(), TargetFamily::clique(4), TargetFamily::odd_cycle(5)}) {
      CAPTURE(name);
      CAPTURE(fam.name());
      HardnessReport h = hardness_interval(g, fam);
      const std::size_t tau = oracle::min_cover(g, fam);
      CHECK(h.tau_lower <= r(tau));
      CHECK(tau <= h.tau_upper);
      CHECK(h.delta_lo <= h.delta_hi);
      CHECK(verify_cover(g, fam, h.best_cover));
      CHECK(h.tau_lower == r(tau));  // the exact oracle finishes on these sizes
    }
  }
}

TEST_CASE("case labels") {
  const Rational beta(1, 10);
  // weight 1 on half the edges
  std::vector<Rational> half(100, 0);
  std::fill(half.begin(), half.begin() + 50, Rational(1));
  CHECK(classify_case(half, beta, Rational(1, 100)).label == ProofCase::Case1);
  CHECK(classify_case(std::vector<Rational>(100, Rational(1, 3)), beta, 0).label == ProofCase::Case2);

  // K4 with the uniform optimum f = 1/3 (the LP may return another optimal vertex)
  Graph k4 = complete_graph(4);
  CaseLabel label = classify_case(std::vector<Rational>(6, Rational(1, 3)), density(k4), Rational(1, 100));
  CHECK(label.f0 == 0);
  CHECK(label.label == ProofCase::Case2);

  // Case 3: many zeros, few ones.
  std::vector<Rational> spread(100, Rational(1, 2));
  std::fill(spread.begin(), spread.begin() + 40, Rational(0));
  CaseLabel three = classify_case(spread, beta, 0);
  CHECK(three.label == ProofCase::Case3);
  CHECK(r(three.f0) >= three.case2_threshold);
  CHECK(r(three.f1) <= three.case1_threshold);

  CHECK(kind_of([&] { classify_case(half, Rational(0), 0); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([&] { classify_case(half, Rational(3, 4), 0); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([&] { classify_case(half, beta, 2); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("case labels are exhaustive and exclusive on the corpus") {
  for (const auto& [name, g] : oracle::small_corpus()) {
    if (g.m() == 0) continue;
    CAPTURE(name);
    FractionalCover c = fractional_cover(g, enumerate_targets(g, TargetFamily::triangles()));
    const Rational beta = density(g);
    CaseLabel l = classify_case(c, beta, delta_of_beta(beta));
    const bool one = r(l.f1) > l.case1_threshold;
    const bool two = !one && r(l.f0) < l.case2_threshold;
    CHECK((l.label == ProofCase::Case1) == one);
    CHECK((l.label == ProofCase::Case2) == two);
    CHECK((l.label == ProofCase::Case3) == (!one && !two));
  }
}

TEST_CASE("witness on a complete bipartite graph") {
  Graph h = generate(MultipartiteSpec{{20, 20}});
  BipartiteWitness w = find_bipartite_witness(h, TargetFamily::triangles(), Rational(1, 5), 7);
  CHECK(verify_witness(h, w, true));
  CHECK(w.threshold_met);
  // each class lies on the side opposite its dominator, and the classes on opposite sides
  auto side = [](Vertex x) { return x < 20; };
  for (Vertex x : w.a) CHECK(side(x) != side(w.u));
  for (Vertex x : w.b) CHECK(side(x) != side(w.w));
  CHECK(side(w.u) != side(w.w));
  CHECK(w.size() == w.a.size() * w.b.size());
}

TEST_CASE("witness errors") {
  CHECK(kind_of([] { find_bipartite_witness(complete_graph(5), TargetFamily::triangles(), Rational(1, 5), 1); }) ==
        ErrorKind::NotTargetFree);
  Graph sparse = disjoint_union(cycle_graph(4), Graph(196, {}));
  CHECK(kind_of([&] { find_bipartite_witness(sparse, TargetFamily::triangles(), Rational(1, 5), 1); }) ==
        ErrorKind::InsufficientDensity);
  CHECK(kind_of([] { find_bipartite_witness(cycle_graph(4), TargetFamily::triangles(), Rational(0), 1); }) ==
        ErrorKind::InvalidSpec);
}

TEST_CASE("witness is seed-deterministic and verified on zero-weight subgraphs") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Graph g = generate(GnpSpec{24, 0.5, seed});
    FractionalCover c = fractional_cover(g, enumerate_targets(g, TargetFamily::triangles()));
    Graph h = zero_weight_subgraph(g, c.weights);
    CHECK_FALSE(has_target(h, TargetFamily::triangles()));
    const Rational beta = density(g);
    try {
      BipartiteWitness w = find_bipartite_witness(h, TargetFamily::triangles(), beta, seed);
      BipartiteWitness again = find_bipartite_witness(h, TargetFamily::triangles(), beta, seed);
      CHECK(w.crossing == again.crossing);
      CHECK(verify_witness(h, w, true));
      // inside a class every G-edge has weight 1
      CHECK(light_paths_absent(g, c.weights, w, 3));
      for (const auto* cls : {&w.a, &w.b}) {
        for (Vertex x : *cls) {
          for (Vertex y : *cls) {
            if (x < y && g.adjacent(x, y)) CHECK(c.weights[*g.edge_id(x, y)] == 1);
          }
        }
      }
      Case3Cut cut = case3_cut(g, w, seed);
      CHECK(cut.crossing >= cut.between);
      CHECK(cut.crossing + cut.cut.removed_count() == g.m());
      CHECK_FALSE(has_target(g.without_edges(cut.cut.removed), TargetFamily::triangles()));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InsufficientDensity);
    }
  }
}

TEST_CASE("verify_witness catches tampering") {
  Graph h = generate(MultipartiteSpec{{6, 6}});
  BipartiteWitness w = find_bipartite_witness(h, TargetFamily::triangles(), Rational(1, 5), 2);
  REQUIRE(verify_witness(h, w, true));
  BipartiteWitness bad = w;
  bad.crossing.pop_back();
  CHECK_FALSE(verify_witness(h, bad, true));
  bad = w;
  bad.b.push_back(bad.a.front());
  CHECK_FALSE(verify_witness(h, bad, true));
}

TEST_CASE("light paths for odd cycles") {
  Graph p = cycle_graph(5);
  BipartiteWitness w;
  w.a = {0, 1, 2, 3};
  std::vector<Rational> light(5, Rational(1, 5));
  CHECK_FALSE(light_paths_absent(p, light, w, 5));  // path 0-1-2-3 of light edges
  w.a = {0, 1, 2};
  CHECK(light_paths_absent(p, light, w, 5));  // only two edges inside the class
  std::vector<Rational> heavy(5, Rational(1, 3));
  CHECK(light_paths_absent(p, heavy, w, 5));
}

TEST_CASE("case 3 cut on a bipartite graph with its own parts") {
  Graph g = generate(MultipartiteSpec{{5, 5}});
  BipartiteWitness w;
  for (Vertex v = 0; v < 5; ++v) w.a.push_back(v);
  for (Vertex v = 5; v < 10; ++v) w.b.push_back(v);
  Case3Cut cut = case3_cut(g, w, 1);
  CHECK(cut.cut.removed_count() == 0);
  CHECK(cut.crossing == 25);
  CHECK(cut.target_met);
  CHECK(cut.refutes_hardness(0, g.m()));
}

TEST_CASE("main bound checks") {
  MainBoundCheck k13 = verify_main_bound(complete_graph(13));
  CHECK(k13.nu_lower == 26);
  CHECK(k13.nu_optimal);
  CHECK(k13.nu_passes);
  CHECK(k13.rhs == (1 + k13.beta * k13.beta / 800) * 78 / 4);

  MainBoundCheck k6 = verify_main_bound(complete_graph(6));
  CHECK(k6.tau_star == std::optional<Rational>(5));
  CHECK(k6.tau_star_passes == std::optional<bool>(true));
  CHECK(k6.hypothesis == Hypothesis::Unmet);  // δ = 1/5 is far above β²/3200

  MainBoundCheck free = verify_main_bound(generate(MultipartiteSpec{{4, 4}}));
  CHECK(free.hypothesis == Hypothesis::Unmet);
  CHECK(free.hardness.delta_lo == 1);
}

TEST_CASE("rho reports") {
  RhoReport k6 = rho_report(complete_graph(6));
  CHECK(k6.rho_lo == 9);
  CHECK(k6.rho_hi == 9);
  CHECK(k6.rho_star == std::optional<Rational>(10));

  RhoReport free = rho_report(cycle_graph(8));
  CHECK(free.rho_lo == 8);
  CHECK(free.rho_star == std::optional<Rational>(8));
  CHECK(free.gap_lo == std::optional<Rational>(1));

  for (const auto& [name, g] : oracle::small_corpus()) {
    CAPTURE(name);
    RhoReport rr = rho_report(g);
    CHECK(rr.rho_lo + rr.hardness.tau_upper == g.m());
    CHECK(*rr.rho_star + *rr.hardness.tau_star == r(g.m()));
    if (rr.gap_hi) CHECK(*rr.gap_hi <= Rational(3, 2));
  }
}

TEST_CASE("uniform 2/3 weights are feasible for the rho relaxation") {
  Graph k10 = complete_graph(10);
  TargetList t = enumerate_targets(k10, TargetFamily::triangles());
  CHECK(rho_relaxation_feasible(t, std::vector<Rational>(k10.m(), Rational(2, 3))));
  CHECK_FALSE(rho_relaxation_feasible(t, std::vector<Rational>(k10.m(), Rational(3, 4))));
}
