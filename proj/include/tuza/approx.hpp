#pragma once

#include "tuza/exact.hpp"
#include "tuza/graph.hpp"
#include "tuza/lp.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace tuza {

/// Vertex partition plus the same-part edges it forces us to delete.
struct CutResult {
  std::vector<std::uint32_t> part;  // per vertex
  std::uint32_t parts = 2;
  std::vector<EdgeId> removed;      // exactly the edges with both ends in one part
  std::size_t removed_count() const noexcept { return removed.size(); }
  std::size_t crossing(const Graph& g) const noexcept { return g.m() - removed.size(); }
};

/// Random bipartition followed by first-improvement single-vertex moves until
/// no move helps. At a local optimum every vertex has at least half its edges
/// crossing, so removed ≤ ⌊m/2⌋.
CutResult bipartize(const Graph& g, std::uint64_t seed);

/// Random (parts)-partition plus greedy vertex moves to the part holding the
/// fewest neighbors; removed ≤ ⌊m/parts⌋ at the local optimum.
CutResult partition_cover(const Graph& g, std::uint32_t parts, std::uint64_t seed);

/// (k-1)-partition: the residue is (k-1)-partite and hence K_k-free.
CutResult kpartition_cover(const Graph& g, int k, std::uint64_t seed);

/// Edges with both endpoints in one part, for a given assignment.
std::vector<EdgeId> same_part_edges(const Graph& g, const std::vector<std::uint32_t>& part);

struct DeletionStep {
  EdgeId edge;            // id in the input graph
  Rational weight;        // f_i(e_i)
  Rational lp_value;      // τ*_k(G_i) before the deletion
  std::uint32_t witness;  // index of the qualifying K_k in G_i's target list
};

/// Record of one run of the edge-deletion process.
struct ProcessTrace {
  int k = 3;
  std::uint64_t seed = 0;
  Rational mantel;                 // ⌊k²/4⌋
  std::size_t zero_threshold = 0;  // C(k,2) - ⌊k²/4⌋
  Rational initial_lp;             // τ*_k(G)
  Rational final_lp;               // τ*_k(G_t)
  std::vector<DeletionStep> steps;
  std::size_t final_edges = 0;     // m - t
  std::size_t final_zero_edges = 0;
  Rational zero_fraction;          // α: zero-weight share of G_t's edges
  std::vector<EdgeId> positive_edges;  // P, ids in the input graph
  std::vector<EdgeId> bipartization;   // F ⊆ P
  Rational ratio_bound;            // ⌊k²/4⌋ · τ*_k(G)
  std::optional<Rational> achieved_ratio;  // |cover| / τ*_k(G) when τ* > 0
  bool halting_verified = false;

  std::size_t t() const noexcept { return steps.size(); }
};

struct ProcessResult {
  CoverSolution cover;
  ProcessTrace trace;
};

/// ⌊k²/4⌋-approximate K_k-cover. Repeatedly solve the fractional K_k-cover LP
/// on G_i; while some K_k has at least C(k,2) - ⌊k²/4⌋ zero-weight edges,
/// delete its heaviest edge (weight ≥ 1/⌊k²/4⌋). Then bipartize the
/// positive-weight subgraph of the final graph and return deletions ∪ F.
/// Throws InvariantViolation if the cover is not K_k-free or exceeds the
/// ratio bound.
ProcessResult kk_cover_process(const Graph& g, int k, std::uint64_t seed = 0, const LpOptions& lp = {});

/// Seeded random scan adding each target that is edge-disjoint from those
/// already taken; maximal, not maximum.
PackingSolution greedy_packing(const TargetList& targets, std::uint64_t seed);

/// Steiner triple system on n points (n ≡ 1 or 3 mod 6): Bose construction for
/// n ≡ 3, Skolem construction for n ≡ 1. Empty optional otherwise.
std::optional<std::vector<std::array<Vertex, 3>>> steiner_triple_system(std::size_t n);

/// Perfect triangle packing of a complete graph from a Steiner triple system,
/// expressed against `targets` (the graph's triangle list).
std::optional<PackingSolution> complete_graph_decomposition(const Graph& g, const TargetList& targets);

/// ⌊k²/4⌋.
inline long mantel_bound(int k) { return static_cast<long>(k) * k / 4; }

}  // namespace tuza
