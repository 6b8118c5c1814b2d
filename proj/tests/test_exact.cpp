#include "oracles.hpp"

#include "tuza/error.hpp"
#include "tuza/exact.hpp"

#include <doctest.h>

using namespace tuza;

TEST_CASE("small clique ground truth") {
  auto cover = [](std::size_t n) {
    Graph g = complete_graph(n);
    return exact_cover(g, enumerate_targets(g, TargetFamily::triangles())).size();
  };
  auto pack = [](std::size_t n) {
    Graph g = complete_graph(n);
    return exact_packing(g, enumerate_targets(g, TargetFamily::triangles())).size();
  };
  CHECK(cover(4) == 2);
  CHECK(pack(4) == 1);
  CHECK(cover(5) == 4);
  CHECK(pack(5) == 2);
  CHECK(cover(6) == 6);
  CHECK(pack(6) == 4);
  CHECK(pack(7) == 7);
}

TEST_CASE("branch-and-bound matches the exhaustive oracles") {
  for (const auto& [name, g] : oracle::small_corpus()) {
    for (TargetFamily fam : {TargetFamily::triangles(), TargetFamily::clique(4), TargetFamily::odd_cycle(5)}) {
      CAPTURE(name);
      CAPTURE(fam.name());
      TargetList list = enumerate_targets(g, fam);
      CoverSolution c = exact_cover(g, list);
      PackingSolution p = exact_packing(g, list);
      REQUIRE(c.optimal);
      REQUIRE(p.optimal);
      CHECK(verify_cover(g, fam, c.edges));
      CHECK(verify_packing(g, list, p.targets));
      CHECK(c.size() == oracle::min_cover(g, fam));
      CHECK(p.size() == oracle::max_packing(g, fam));
    }
  }
}

TEST_CASE("max cut matches the oracle") {
  for (const auto& [name, g] : oracle::small_corpus()) {
    CAPTURE(name);
    MaxCut cut = max_cut_exact(g);
    REQUIRE(cut.optimal);
    CHECK(cut.value == oracle::max_cut(g));
    std::size_t crossing = 0;
    for (const auto& e : g.edges()) crossing += cut.side[e.u] != cut.side[e.v];
    CHECK(crossing == cut.value);
  }
  // τ(K_n) = m - maxcut(K_n)
  Graph k6 = complete_graph(6);
  CHECK(max_cut_exact(k6).value == 9);
  CHECK(exact_cover(k6, enumerate_targets(k6, TargetFamily::triangles())).size() == 15 - 9);
}

TEST_CASE("budgets cut searches short without losing feasibility") {
  Graph g = complete_graph(8);
  TargetList list = enumerate_targets(g, TargetFamily::triangles());
  Budget tiny{5, std::chrono::milliseconds(10'000)};
  CoverSolution c = exact_cover(g, list, tiny);
  CHECK_FALSE(c.optimal);
  CHECK(verify_cover(g, TargetFamily::triangles(), c.edges));
  PackingSolution p = exact_packing(g, list, tiny);
  CHECK_FALSE(p.optimal);
  CHECK(verify_packing(g, list, p.targets));
  CHECK_FALSE(max_cut_exact(g, tiny).optimal);
  CHECK_THROWS_AS(exact_cover(g, list, Budget{0, std::chrono::milliseconds(1)}), Error);
  CHECK_THROWS_AS(exact_cover(complete_graph(5), list), Error);
}

TEST_CASE("verifiers reject bad certificates") {
  Graph g = complete_graph(4);
  TargetList list = enumerate_targets(g, TargetFamily::triangles());
  CHECK_FALSE(verify_cover(g, TargetFamily::triangles(), {0}));
  CHECK(verify_cover(g, TargetFamily::triangles(), {0, 5}));
  CHECK_FALSE(verify_packing(g, list, {0, 1}));
  CHECK_FALSE(verify_packing(g, list, {9}));
  CHECK(verify_packing(g, list, {2}));
}

TEST_CASE("odd cycle covers") {
  Graph c5 = cycle_graph(5);
  TargetList list = enumerate_targets(c5, TargetFamily::odd_cycle(5));
  CHECK(exact_cover(c5, list).size() == 1);
  Graph k5 = complete_graph(5);
  TargetList k5c = enumerate_targets(k5, TargetFamily::odd_cycle(5));
  CHECK(exact_packing(k5, k5c).size() == 2);
}
