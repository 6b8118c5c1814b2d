#include "oracles.hpp"

#include "tuza/error.hpp"
#include "tuza/lp.hpp"

#include <doctest.h>

using namespace tuza;

namespace {

FractionalCover solve(const Graph& g, const TargetFamily& fam, const LpOptions& opts = {}) {
  return fractional_cover(g, enumerate_targets(g, fam), opts);
}

// Optimality by certificate: a feasible cover and a feasible packing of equal
// value are both optimal (weak duality). Checked with independent arithmetic.
void check_certificate(const Graph& g, const TargetFamily& fam, const FractionalCover& c) {
  auto targets = oracle::target_edge_sets(g, fam);
  REQUIRE(c.weights.size() == g.m());
  REQUIRE(c.dual_packing.weights.size() == targets.size());
  Rational cover_sum = 0, packing_sum = 0;
  for (const auto& w : c.weights) {
    CHECK(w >= 0);
    CHECK(w <= 1);
    cover_sum += w;
  }
  for (const auto& w : c.dual_packing.weights) {
    CHECK(w >= 0);
    packing_sum += w;
  }
  TargetList list = enumerate_targets(g, fam);
  for (const auto& t : list.targets) {
    Rational s = 0;
    for (EdgeId e : t.edges) s += c.weights[e];
    CHECK(s >= 1);
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    Rational s = 0;
    for (auto t : list.incidence[e]) s += c.dual_packing.weights[t];
    CHECK(s <= 1);
  }
  CHECK(cover_sum == c.value);
  CHECK(packing_sum == c.dual_packing.value);
  CHECK(c.value == c.dual_packing.value);
}

}  // namespace

TEST_CASE("fractional values of small complete graphs") {
  CHECK(solve(complete_graph(3), TargetFamily::triangles()).value == 1);
  CHECK(solve(complete_graph(4), TargetFamily::triangles()).value == 2);
  CHECK(solve(complete_graph(5), TargetFamily::triangles()).value == Rational(10, 3));
  CHECK(solve(complete_graph(6), TargetFamily::triangles()).value == 5);
  CHECK(solve(complete_graph(8), TargetFamily::triangles()).value == Rational(28, 3));
  CHECK(solve(complete_graph(5), TargetFamily::clique(4)).value == Rational(5, 3));
  CHECK(solve(cycle_graph(5), TargetFamily::odd_cycle(5)).value == 1);
  CHECK(solve(generate(MultipartiteSpec{{3, 3}}), TargetFamily::triangles()).value == 0);
}

TEST_CASE("duality and certificates over the corpus") {
  for (const auto& [name, g] : oracle::small_corpus()) {
    for (TargetFamily fam : {TargetFamily::triangles(), TargetFamily::clique(4), TargetFamily::odd_cycle(5)}) {
      CAPTURE(name);
      CAPTURE(fam.name());
      FractionalCover c = solve(g, fam);
      check_certificate(g, fam, c);
      TargetList list = enumerate_targets(g, fam);
      CHECK(check_slackness(list, c, c.dual_packing).both_directions());
      CHECK(is_fractional_cover(list, c.weights));
      CHECK(is_fractional_packing(list, c.dual_packing.weights));
    }
  }
}

TEST_CASE("pivot rules agree on the optimum") {
  LpOptions bland;
  bland.rule = PivotRule::Bland;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Graph g = generate(GnpSpec{9, 0.6, seed});
    CHECK(solve(g, TargetFamily::triangles(), bland).value == solve(g, TargetFamily::triangles()).value);
  }
}

TEST_CASE("fractional value lies between packing and cover integers") {
  for (const auto& [name, g] : oracle::small_corpus()) {
    CAPTURE(name);
    const Rational v = solve(g, TargetFamily::triangles()).value;
    CHECK(Rational(static_cast<unsigned long>(oracle::max_packing(g, TargetFamily::triangles()))) <= v);
    CHECK(v <= Rational(static_cast<unsigned long>(oracle::min_cover(g, TargetFamily::triangles()))));
  }
}

TEST_CASE("support classes") {
  std::vector<Rational> w = {0, 1, Rational(1, 3), Rational(1, 2), 0};
  auto c = support_classes(w, Rational(1, 2));
  CHECK(c.zero == std::vector<EdgeId>{0, 4});
  CHECK(c.heavy == std::vector<EdgeId>{1, 3});
  CHECK(c.middle == std::vector<EdgeId>{2});
  CHECK_THROWS_AS(support_classes(w, Rational(0)), Error);
  CHECK_THROWS_AS(support_classes(w, Rational(3, 2)), Error);
}

TEST_CASE("slackness detects broken pairs") {
  Graph g = complete_graph(4);
  TargetList list = enumerate_targets(g, TargetFamily::triangles());
  std::vector<Rational> cover(g.m(), Rational(1, 3));
  std::vector<Rational> packing(list.size(), Rational(1, 2));
  CHECK(check_slackness(list, cover, packing).both_directions());
  cover[0] = 1;  // still feasible, no longer optimal
  auto r = check_slackness(list, cover, packing);
  CHECK_FALSE(r.target_violations.empty());
  packing[0] = 0;
  CHECK_FALSE(check_slackness(list, std::vector<Rational>(g.m(), Rational(1, 3)), packing).satisfied());
  CHECK_THROWS_AS(check_slackness(list, std::vector<Rational>(2), packing), Error);
}

TEST_CASE("LP errors") {
  Graph g = complete_graph(6);
  TargetList list = enumerate_targets(g, TargetFamily::triangles());
  LpOptions tiny;
  tiny.size_cap = 10;
  CHECK_THROWS_AS(fractional_cover(g, list, tiny), Error);
  CHECK_THROWS_AS(fractional_cover(complete_graph(5), list), Error);
  FractionalCover empty = solve(cycle_graph(6), TargetFamily::triangles());
  CHECK(empty.value == 0);
  CHECK(fractional_packing(g, list).value == 5);
}
