#pragma once

#include "tuza/graph.hpp"
#include "tuza/rational.hpp"

#include <cstddef>
#include <vector>

namespace tuza {

/// Maximum fractional packing g: targets -> Q≥0 with Σ_{t∋e} g(t) ≤ 1 per edge.
struct FractionalPacking {
  TargetFamily family = TargetFamily::triangles();
  std::vector<Rational> weights;  // per target
  Rational value;
};

/// Minimum fractional cover f: edges -> [0,1] with Σ_{e∈t} f(e) ≥ 1 per target.
/// `dual_packing` is the optimal packing read off the same simplex solve, so the
/// pair satisfies complementary slackness.
struct FractionalCover {
  TargetFamily family = TargetFamily::triangles();
  std::vector<Rational> weights;  // per edge
  Rational value;
  FractionalPacking dual_packing;
  std::size_t pivots = 0;
};

enum class PivotRule {
  Bland,
  /// Largest reduced cost; falls back to Bland permanently after a run of
  /// degenerate pivots, which keeps termination guaranteed.
  DantzigThenBland,
};

struct LpOptions {
  std::size_t size_cap = 50'000;  // variables + constraints
  PivotRule rule = PivotRule::DantzigThenBland;
  std::size_t degenerate_streak = 50;
  std::size_t pivot_cap = 10'000'000;
};

/// Solves the cover LP and its dual exactly. Throws LpTooLarge when
/// targets + edges exceed the cap.
FractionalCover fractional_cover(const Graph& g, const TargetList& targets, const LpOptions& options = {});

/// The packing half of the same solve; value equals the cover value exactly.
FractionalPacking fractional_packing(const Graph& g, const TargetList& targets, const LpOptions& options = {});

/// Edges split by an optimal cover into F0 = {f = 0} and F_θ = {f ≥ θ}.
struct EdgeClassification {
  Rational threshold;
  std::vector<EdgeId> zero;     // F0
  std::vector<EdgeId> heavy;    // F_θ
  std::vector<EdgeId> middle;   // 0 < f < θ
};

/// Throws BadThreshold unless 0 < θ ≤ 1.
EdgeClassification support_classes(const std::vector<Rational>& edge_weights, const Rational& threshold);
EdgeClassification support_classes(const FractionalCover& cover, const Rational& threshold);

struct SlacknessReport {
  std::vector<EdgeId> violations;  // f(e) > 0 but Σ_{t∋e} g(t) ≠ 1
  std::vector<std::uint32_t> target_violations;  // g(t) > 0 but Σ_{e∈t} f(e) ≠ 1
  bool satisfied() const noexcept { return violations.empty(); }
  bool both_directions() const noexcept { return violations.empty() && target_violations.empty(); }
};

/// Throws MismatchedInstance when the weight vectors do not fit `targets`.
SlacknessReport check_slackness(const TargetList& targets, const std::vector<Rational>& cover_weights,
                                const std::vector<Rational>& packing_weights);
SlacknessReport check_slackness(const TargetList& targets, const FractionalCover& cover,
                                const FractionalPacking& packing);

/// Substitution checks used by tests and post-conditions.
bool is_fractional_cover(const TargetList& targets, const std::vector<Rational>& edge_weights);
bool is_fractional_packing(const TargetList& targets, const std::vector<Rational>& target_weights);

}  // namespace tuza
