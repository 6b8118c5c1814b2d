#pragma once

// Brute-force reference implementations for small instances. Each works from
// first principles (subset or permutation enumeration) and shares no code
// with the solvers beyond the Graph type.

#include "tuza/graph.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

/// Every K_k as a sorted vertex tuple, by scanning all k-subsets.
std::set<std::vector<tuza::Vertex>> cliques(const tuza::Graph& g, int k);

/// Every C_k as a set of edge ids, by scanning vertex permutations.
std::set<std::vector<tuza::EdgeId>> cycles(const tuza::Graph& g, int k);

/// Target edge sets for the family, from the two scans above.
std::vector<std::vector<tuza::EdgeId>> target_edge_sets(const tuza::Graph& g, const tuza::TargetFamily& family);

/// Smallest edge set meeting every target, over all subsets by size (m ≤ 24).
std::size_t min_cover(const tuza::Graph& g, const tuza::TargetFamily& family);

/// Largest edge-disjoint target collection by exhaustive recursion.
std::size_t max_packing(const tuza::Graph& g, const tuza::TargetFamily& family);

/// Max cut over all 2^n assignments.
std::size_t max_cut(const tuza::Graph& g);

/// Small graphs used across suites: complete, multipartite, cycles, Petersen,
/// blow-ups and seeded G(n,p).
struct Named {
  std::string name;
  tuza::Graph graph;
};
std::vector<Named> small_corpus();

}  // namespace oracle
