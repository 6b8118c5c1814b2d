#pragma once

#include "tuza/graph.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace tuza {

/// Per-solve search limits. Both caps must be positive.
struct Budget {
  std::uint64_t node_cap = 50'000'000;
  std::chrono::milliseconds time_cap{60'000};
};

/// Edge set meeting every target. `optimal` is true only when a search
/// finished within budget and proved the size minimum.
struct CoverSolution {
  TargetFamily family = TargetFamily::triangles();
  std::vector<EdgeId> edges;
  bool optimal = false;
  std::uint64_t nodes = 0;
  std::size_t size() const noexcept { return edges.size(); }
};

/// Pairwise edge-disjoint targets, as indices into the TargetList.
struct PackingSolution {
  TargetFamily family = TargetFamily::triangles();
  std::vector<std::uint32_t> targets;
  bool optimal = false;
  std::uint64_t nodes = 0;
  std::size_t size() const noexcept { return targets.size(); }
};

/// Minimum hitting set by branch-and-bound: branch on the edges of the
/// lowest-index unhit target in index order, bound with a greedy count of
/// disjoint unhit targets. On budget exhaustion the incumbent is returned
/// with optimal = false.
CoverSolution exact_cover(const Graph& g, const TargetList& targets, const Budget& budget = {});

/// Maximum set packing by include/exclude branch-and-bound with
/// edge-disjointness propagation and degree/edge-count upper bounds.
PackingSolution exact_packing(const Graph& g, const TargetList& targets, const Budget& budget = {});

struct MaxCut {
  std::size_t value = 0;
  std::vector<std::uint8_t> side;  // per vertex, 0 or 1
  bool optimal = false;
};

/// Exhaustive Gray-code enumeration of bipartitions (vertex n-1 fixed).
MaxCut max_cut_exact(const Graph& g, const Budget& budget = {});

/// Deleting the cover leaves no target (re-enumerated).
bool verify_cover(const Graph& g, const TargetFamily& family, const std::vector<EdgeId>& cover);
/// Listed targets exist and are pairwise edge-disjoint.
bool verify_packing(const Graph& g, const TargetList& targets, const std::vector<std::uint32_t>& chosen);

}  // namespace tuza
