#include "oracles.hpp"

#include "tuza/error.hpp"
#include "tuza/graph.hpp"

#include <doctest.h>

using namespace tuza;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected tuza::Error");
  return ErrorKind::InvariantViolation;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("parse_graph reads edge lists with headers and comments") {
  Graph g = parse_graph("# triangle plus pendant\nn 5\n0 1\n1 2\n\n0 2  # closing edge\n2 3\n");
  CHECK(g.n() == 5);
  CHECK(g.m() == 4);
  CHECK(g.degree(2) == 3);
  CHECK(g.degree(4) == 0);
  CHECK(g.edge_id(2, 0).has_value());
  CHECK_FALSE(g.adjacent(0, 3));

  CHECK(parse_graph("0 1\n1 2\n2 0\n").n() == 3);
  CHECK(parse_graph("").m() == 0);
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK(kind_of([] { parse_graph("0 1\n0 0\n"); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { parse_graph("0 1\n1 0\n"); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { parse_graph("0 x\n"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_graph("0 1 2\n"); }) == ErrorKind::MalformedLine);
  CHECK(kind_of([] { parse_graph("-1 2\n"); }) == ErrorKind::MalformedLine);
}

TEST_CASE("edge ids follow the sorted canonical edge list") {
  Graph g(4, {{3, 2}, {0, 3}, {1, 0}});
  REQUIRE(g.m() == 3);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.edge(1).v == 3);
  CHECK(g.edge(2).u == 2);
  CHECK(*g.edge_id(3, 2) == 2);
  CHECK(kind_of([] { Graph(2, {{0, 2}}); }) == ErrorKind::InvalidSpec);

  auto [sub, map] = g.spanning_subgraph({true, false, true});
  CHECK(sub.m() == 2);
  CHECK(map == std::vector<EdgeId>{0, 2});
  CHECK(g.without_edges({1}).m() == 2);
  CHECK(parse_graph(g.to_edge_list()).edges() == g.edges());
}

TEST_CASE("target families validate and canonicalize") {
  CHECK(TargetFamily::odd_cycle(3) == TargetFamily::triangles());
  CHECK(TargetFamily::parse("C5") == TargetFamily::odd_cycle(5));
  CHECK(TargetFamily::parse("triangle") == TargetFamily::triangles());
  CHECK(TargetFamily::clique(4).name() == "K4");
  CHECK(TargetFamily::clique(4).edges_per_target() == 6);
  CHECK(TargetFamily::odd_cycle(7).edges_per_target() == 7);
  CHECK(kind_of([] { TargetFamily::clique(2); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { TargetFamily::odd_cycle(4); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { TargetFamily::parse("X3"); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("clique counts in complete graphs are binomial") {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (int k = 3; k <= 5; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(enumerate_targets(complete_graph(n), TargetFamily::clique(k)).size() == binomial(n, k));
    }
  }
}

TEST_CASE("odd cycle counts match brute force") {
  CHECK(enumerate_targets(complete_graph(5), TargetFamily::odd_cycle(5)).size() == 12);
  CHECK(enumerate_targets(cycle_graph(5), TargetFamily::odd_cycle(5)).size() == 1);
  CHECK(enumerate_targets(petersen_graph(), TargetFamily::odd_cycle(5)).size() == 12);
  CHECK(enumerate_targets(complete_graph(7), TargetFamily::odd_cycle(7)).size() == 360);
  CHECK(enumerate_targets(generate(MultipartiteSpec{{3, 3}}), TargetFamily::odd_cycle(5)).empty());
}

TEST_CASE("enumeration agrees with the subset and permutation oracles") {
  for (const auto& [name, g] : oracle::small_corpus()) {
    for (TargetFamily fam : {TargetFamily::triangles(), TargetFamily::clique(4), TargetFamily::odd_cycle(5)}) {
      CAPTURE(name);
      CAPTURE(fam.name());
      TargetList list = enumerate_targets(g, fam);
      auto expected = oracle::target_edge_sets(g, fam);
      std::set<std::vector<EdgeId>> got;
      for (const auto& t : list.targets) {
        CHECK(t.edges.size() == static_cast<std::size_t>(fam.edges_per_target()));
        got.insert(t.edges);
      }
      CHECK(got.size() == list.size());  // no duplicates
      CHECK(got == std::set<std::vector<EdgeId>>(expected.begin(), expected.end()));
      CHECK(has_target(g, fam) == !expected.empty());

      // incidence is the transpose of the target edge lists
      REQUIRE(list.incidence.size() == g.m());
      std::size_t pairs = 0;
      for (EdgeId e = 0; e < g.m(); ++e) {
        for (auto t : list.incidence[e]) {
          CHECK(std::binary_search(list.targets[t].edges.begin(), list.targets[t].edges.end(), e));
          ++pairs;
        }
      }
      CHECK(pairs == list.size() * static_cast<std::size_t>(fam.edges_per_target()));
    }
  }
}

TEST_CASE("enumeration cap raises BudgetExceeded") {
  CHECK(kind_of([] { enumerate_targets(complete_graph(10), TargetFamily::triangles(), 100); }) ==
        ErrorKind::BudgetExceeded);
  CHECK(enumerate_targets(complete_graph(10), TargetFamily::triangles(), 120).size() == 120);
}

TEST_CASE("generators") {
  CHECK(generate(CompleteSpec{6}).m() == 15);
  CHECK(generate(MultipartiteSpec{{2, 3, 4}}).m() == 6 + 8 + 12);
  CHECK(generate(CycleSpec{9}).m() == 9);
  CHECK(petersen_graph().m() == 15);
  Graph blow = generate(BlowupSpec{complete_graph(3), 2});
  CHECK(blow.n() == 6);
  CHECK(blow.m() == 12);
  Graph a = generate(GnpSpec{30, 0.3, 7});
  Graph b = generate(GnpSpec{30, 0.3, 7});
  CHECK(a.edges() == b.edges());
  CHECK(generate(GnpSpec{30, 0.0, 1}).m() == 0);
  CHECK(generate(GnpSpec{10, 1.0, 1}).m() == 45);
  Graph bip = generate(BipartiteGnpSpec{5, 6, 1.0, 3});
  CHECK(bip.m() == 30);
  CHECK_FALSE(has_target(bip, TargetFamily::triangles()));
  CHECK(kind_of([] { generate(GnpSpec{5, 1.5, 1}); }) == ErrorKind::InvalidSpec);
  CHECK(describe(GnpSpec{10, 0.5, 3}).find("seed=3") != std::string::npos);
}

TEST_CASE("density is m / n^2") {
  CHECK(density(complete_graph(4)) == Rational(3, 8));
  CHECK(kind_of([] { density(Graph()); }) == ErrorKind::EmptyGraph);
}
