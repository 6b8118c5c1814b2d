#pragma once

#include "tuza/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tuza {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are kept in sorted
/// (u, v) order with u < v, and an edge's index in that list is its identity
/// for the lifetime of the graph.
class Graph {
public:
  Graph() = default;

  /// Validates and canonicalizes. Throws SelfLoop / DuplicateEdge /
  /// InvalidSpec (endpoint out of range).
  Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t n() const noexcept { return neighbors_.size(); }
  std::size_t m() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Sorted neighbor list of v; parallel to incident_edges(v).
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  const std::vector<EdgeId>& incident_edges(Vertex v) const { return incident_[v]; }
  std::size_t degree(Vertex v) const { return neighbors_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  /// Subgraph on the same vertex set keeping edges with keep[e] true. The
  /// returned map sends new edge ids to ids of this graph (monotone).
  std::pair<Graph, std::vector<EdgeId>> spanning_subgraph(const std::vector<bool>& keep) const;

  /// Subgraph with the listed edges removed.
  Graph without_edges(const std::vector<EdgeId>& removed) const;

  bool is_complete() const noexcept { return m() == n() * (n() - (n() > 0 ? 1 : 0)) / 2; }

  std::string to_edge_list() const;

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Edge-list text: "u v" per line, optional "n <count>" header, '#' starts a comment.
Graph parse_graph(std::string_view text);

// ---------------------------------------------------------------------------

enum class TargetKind { Clique, OddCycle };

/// The subgraph family being covered or packed: K_k or C_k.
class TargetFamily {
public:
  /// Throws InvalidSpec unless k >= 3 (and k odd for cycles). OddCycle(3) is
  /// canonicalized to Clique(3).
  TargetFamily(TargetKind kind, int k);

  static TargetFamily triangles() { return {TargetKind::Clique, 3}; }
  static TargetFamily clique(int k) { return {TargetKind::Clique, k}; }
  static TargetFamily odd_cycle(int k) { return {TargetKind::OddCycle, k}; }

  TargetKind kind() const noexcept { return kind_; }
  int k() const noexcept { return k_; }
  bool is_triangle() const noexcept { return kind_ == TargetKind::Clique && k_ == 3; }

  /// Number of edges in one target: C(k,2) for cliques, k for cycles.
  int edges_per_target() const noexcept;
  /// Edges of a target meeting any one of its vertices.
  int edges_per_vertex() const noexcept;
  /// Parts needed so every target has an edge inside a part after deleting the
  /// cut: k-1 for cliques, 2 for odd cycles.
  int partite_bound() const noexcept;

  std::string name() const;  // "K3", "C5", ...
  static TargetFamily parse(std::string_view text);

  bool operator==(const TargetFamily&) const = default;

private:
  TargetKind kind_;
  int k_;
};

struct Target {
  std::vector<EdgeId> edges;     // sorted ascending
  std::vector<Vertex> vertices;  // clique: ascending; cycle: canonical cyclic order
};

/// All copies of a target family in a graph, plus the edge-to-target incidence.
struct TargetList {
  TargetFamily family = TargetFamily::triangles();
  std::size_t edge_count = 0;  // m of the graph it was built on
  std::vector<Target> targets;
  std::vector<std::vector<std::uint32_t>> incidence;  // per edge, ascending target ids

  std::size_t size() const noexcept { return targets.size(); }
  bool empty() const noexcept { return targets.empty(); }
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Lists every K_k (ordered clique extension) or C_k (canonical rooted search)
/// once. Throws BudgetExceeded past `cap` targets.
TargetList enumerate_targets(const Graph& g, const TargetFamily& family,
                             std::size_t cap = kDefaultEnumerationCap);

bool has_target(const Graph& g, const TargetFamily& family);

/// β = m / n². Throws EmptyGraph when n = 0.
Rational density(const Graph& g);

// ---------------------------------------------------------------------------

struct CompleteSpec { std::size_t n; };
struct MultipartiteSpec { std::vector<std::size_t> parts; };
struct GnpSpec { std::size_t n; double p; std::uint64_t seed; };
/// Random bipartite graph: parts of size left/right, each cross pair with
/// probability p.
struct BipartiteGnpSpec { std::size_t left; std::size_t right; double p; std::uint64_t seed; };
struct CycleSpec { std::size_t n; };
struct BlowupSpec { Graph base; std::size_t t; };

using GeneratorSpec =
    std::variant<CompleteSpec, MultipartiteSpec, GnpSpec, BipartiteGnpSpec, CycleSpec, BlowupSpec>;

/// Throws InvalidSpec on p outside [0,1] or other bad parameters.
Graph generate(const GeneratorSpec& spec);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();
/// Vertex-disjoint union.
Graph disjoint_union(const Graph& a, const Graph& b);

std::string describe(const GeneratorSpec& spec);

}  // namespace tuza
