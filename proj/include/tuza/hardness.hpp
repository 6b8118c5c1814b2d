#pragma once

#include "tuza/approx.hpp"
#include "tuza/exact.hpp"
#include "tuza/graph.hpp"
#include "tuza/lp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tuza {

struct HardnessOptions {
  Budget budget;
  LpOptions lp;
  std::uint64_t seed = 1;
  bool solve_lp = true;
  bool run_exact = true;
  /// Also try the ⌊k²/4⌋ deletion process as an upper bound (cliques only).
  bool run_process = true;
};

/// Where G sits relative to the cut ceiling m/(k-1) (m/2 for triangles and odd
/// cycles). G is (1-δ)-hard iff τ ≥ (1-δ)·m/d; the τ bounds give δ ∈ [lo, hi].
struct HardnessReport {
  TargetFamily family = TargetFamily::triangles();
  std::size_t n = 0;
  std::size_t m = 0;
  Rational beta;
  std::size_t targets = 0;
  std::optional<Rational> tau_star;    // LP optimum
  std::optional<std::size_t> tau_exact;  // when the oracle finished
  Rational tau_lower;                  // max(⌈τ*⌉, exact)
  std::size_t tau_upper = 0;
  std::string tau_upper_source;
  std::vector<EdgeId> best_cover;
  Rational delta_lo;
  Rational delta_hi;
  std::optional<FractionalCover> cover;  // the LP solution, for downstream analysis
};

/// Ceiling divisor d: k-1 for cliques, 2 for odd cycles.
int hardness_divisor(const TargetFamily& family);

/// δ solving τ = (1-δ)·m/d. m = 0 gives δ = 1.
Rational hardness_delta(const Rational& tau, std::size_t m, const TargetFamily& family);

HardnessReport hardness_interval(const Graph& g, const TargetFamily& family, const HardnessOptions& options = {});

// ---------------------------------------------------------------------------

enum class ProofCase { Case1, Case2, Case3 };
std::string to_string(ProofCase c);

struct CaseLabel {
  ProofCase label = ProofCase::Case3;
  std::size_t m = 0;
  std::size_t f0 = 0;        // |F0|
  std::size_t f1 = 0;        // |F1|
  Rational beta;
  Rational delta;
  Rational case1_threshold;  // (δ + β²/800)·m/2, Case 1 iff |F1| exceeds it
  Rational case2_threshold;  // (1 - 3β²/800)·m/4, Case 2 iff |F0| is below it
  std::string reason;
};

/// First matching case with exact comparisons; Case 3 is the complement.
/// Requires 0 < β ≤ 1/2 and 0 ≤ δ ≤ 1 (InvalidSpec otherwise).
CaseLabel classify_case(const std::vector<Rational>& cover_weights, const Rational& beta, const Rational& delta);
CaseLabel classify_case(const FractionalCover& cover, const Rational& beta, const Rational& delta);

// ---------------------------------------------------------------------------

/// Two vertex classes A, B of H with common neighbors u (of all of A) and
/// w (of all of B), and the H-edges between them.
struct BipartiteWitness {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  Vertex u = 0;
  Vertex w = 0;
  std::vector<EdgeId> crossing;   // F*, edge ids of H
  Rational threshold;             // β²·m/500 with m = β·n²
  bool threshold_met = false;
  std::size_t peeled_vertices = 0;  // vertices left in H' after peeling
  std::size_t sample_size = 0;      // c
  std::size_t attempts = 0;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return crossing.size(); }
};

/// Randomized construction behind the dense induced bipartite subgraph:
/// peel vertices of degree < 0.124·β·n, sample c = min(n, ⌈1/(0.124β)⌉)
/// vertices, drop undominated vertices, class each remaining vertex by its
/// lowest-index dominating sample vertex, and return the class pair with the
/// most H-edges between them. Retries with a fresh sample until the β²m/500
/// threshold is met or `retries` runs out, keeping the best.
/// Throws NotTargetFree if H contains a target, InsufficientDensity if
/// peeling empties H.
BipartiteWitness find_bipartite_witness(const Graph& h, const TargetFamily& family, const Rational& beta,
                                        std::uint64_t seed, std::size_t retries = 32);

/// Re-checks the witness invariants against H: A ∩ B = ∅, u ∉ A, w ∉ B,
/// u ~ A, w ~ B, and F* is exactly the H-edge set between A and B. With
/// `independent_classes`, A and B must also be independent in H.
bool verify_witness(const Graph& h, const BipartiteWitness& witness, bool independent_classes);

/// The zero-weight subgraph H = (V, F0) of a cover.
Graph zero_weight_subgraph(const Graph& g, const std::vector<Rational>& cover_weights);

/// In G, no class of the witness contains a path with k-2 edges all of weight
/// below 1/(k-2). For triangles: every edge inside A or B has f = 1.
bool light_paths_absent(const Graph& g, const std::vector<Rational>& cover_weights,
                        const BipartiteWitness& witness, int k);

struct Case3Cut {
  CutResult cut;                  // part 0 = A ∪ X, part 1 = B ∪ Y
  std::size_t crossing = 0;
  std::size_t between = 0;        // |E(A,B)| in G
  std::size_t inside_a = 0;       // |E(A)|
  std::size_t inside_b = 0;       // |E(B)|
  Rational target;                // m/2 + m·β²/1600
  bool target_met = false;
  std::size_t attempts = 0;
  std::uint64_t seed = 0;

  /// removed < (1-δ)·m/2, hence G is not (1-δ)-hard to make triangle-free.
  bool refutes_hardness(const Rational& delta, std::size_t m) const;
};

/// Random splits of V∖(A∪B) into X, Y; keeps the best cut (A∪X, B∪Y).
Case3Cut case3_cut(const Graph& g, const BipartiteWitness& witness, std::uint64_t seed, std::size_t retries = 32);

// ---------------------------------------------------------------------------

enum class Hypothesis { Met, Unmet, Undetermined };
std::string to_string(Hypothesis h);

struct MainBoundOptions {
  HardnessOptions hardness;
  /// Packing search budget; the decomposition and greedy bounds are always tried.
  Budget packing_budget{2'000'000, std::chrono::milliseconds(20'000)};
  bool run_exact_packing = true;
};

struct MainBoundCheck {
  std::size_t n = 0;
  std::size_t m = 0;
  Rational beta;
  Rational rhs;                       // (1 + β²/800)·m/4
  std::size_t nu_lower = 0;
  std::string nu_source;              // "exact", "decomposition", "greedy", ...
  bool nu_optimal = false;
  std::optional<Rational> tau_star;
  std::optional<bool> tau_star_passes;  // τ* ≥ rhs
  bool nu_passes = false;               // ν ≥ rhs
  Rational delta_beta;                  // β²/3200 operating choice of δ(β)
  Hypothesis hypothesis = Hypothesis::Undetermined;
  HardnessReport hardness;
};

/// Triangle family only.
MainBoundCheck verify_main_bound(const Graph& g, const MainBoundOptions& options = {});

/// δ(β) = β²/3200.
Rational delta_of_beta(const Rational& beta);

// ---------------------------------------------------------------------------

struct RhoReport {
  std::size_t m = 0;
  std::size_t rho_lo = 0;     // m - τ_upper
  std::size_t rho_hi = 0;     // m - τ_lower
  std::optional<Rational> rho_star;  // m - τ*
  std::optional<Rational> gap_lo;    // ρ*/ρ_hi
  std::optional<Rational> gap_hi;    // ρ*/ρ_lo
  Rational gap_bound;                // from the hard / not-hard dichotomy
  std::string gap_branch;            // "hard", "not-hard" or "undetermined"
  HardnessReport hardness;
};

RhoReport rho_report(const Graph& g, const HardnessOptions& options = {});

/// Edge weights in [0,1] with every triangle summing to at most 2.
bool rho_relaxation_feasible(const TargetList& triangles, const std::vector<Rational>& weights);

}  // namespace tuza
