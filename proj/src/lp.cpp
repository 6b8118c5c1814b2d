#include "tuza/lp.hpp"

#include "tuza/error.hpp"

#include <limits>
#include <optional>

namespace tuza {

namespace {

// Revised primal simplex with an explicit rational basis inverse for
//   max Σ_t g(t)  s.t.  Σ_{t∋e} g(t) + s_e = 1,  g, s ≥ 0.
// Variables 0..T-1 are targets, T..T+m-1 are slacks. The slack basis is
// feasible since the right-hand side is all ones, so no phase 1 is needed.
// The simplex multipliers y = c_B B⁻¹ are an optimal solution of the dual
// (cover) LP at termination, so f = y.
class PackingSimplex {
public:
  PackingSimplex(const TargetList& targets, const LpOptions& options)
      : options_(options),
        list_(targets),
        rows_(targets.edge_count),
        targets_(targets.size()),
        inverse_(rows_, std::vector<Rational>(rows_)),
        rhs_(rows_, Rational(1)),
        dual_(rows_),
        basis_(rows_),
        in_basis_(targets_ + rows_, false) {
    for (std::size_t e = 0; e < rows_; ++e) {
      inverse_[e][e] = 1;
      basis_[e] = targets_ + e;
      in_basis_[targets_ + e] = true;
    }
  }

  void solve() {
    bool bland = options_.rule == PivotRule::Bland;
    std::size_t streak = 0;
    std::vector<Rational> column(rows_);
    while (true) {
      auto entering = choose_entering(bland);
      if (!entering) return;
      compute_column(entering->first, column);
      auto leaving = choose_leaving(column);
      // Every target column is nonnegative and nonzero, so the packing LP is
      // bounded and a leaving row always exists.
      ensure(leaving.has_value(), "simplex: unbounded packing LP");
      bool degenerate = sgn(rhs_[*leaving]) == 0;
      pivot(*leaving, entering->first, entering->second, column);
      if (++pivots_ > options_.pivot_cap) {
        throw Error(ErrorKind::InvariantViolation, "simplex exceeded the pivot cap");
      }
      streak = degenerate ? streak + 1 : 0;
      if (!bland && streak >= options_.degenerate_streak) bland = true;
    }
  }

  std::vector<Rational> packing() const {
    std::vector<Rational> g(targets_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < targets_) g[basis_[r]] = rhs_[r];
    }
    return g;
  }

  const std::vector<Rational>& cover() const { return dual_; }
  const Rational& value() const { return objective_; }
  std::size_t pivots() const { return pivots_; }

private:
  // Reduced cost: 1 - Σ_{e∈t} y_e for a target, -y_e for slack e.
  void reduced_cost(std::size_t j, Rational& out) const {
    if (j < targets_) {
      out = 1;
      for (EdgeId e : list_.targets[j].edges) out -= dual_[e];
    } else {
      out = -dual_[j - targets_];
    }
  }

  // Bland: lowest index with positive reduced cost. Otherwise the largest.
  std::optional<std::pair<std::size_t, Rational>> choose_entering(bool bland) const {
    std::optional<std::pair<std::size_t, Rational>> best;
    Rational d;
    for (std::size_t j = 0; j < targets_ + rows_; ++j) {
      if (in_basis_[j]) continue;
      reduced_cost(j, d);
      if (sgn(d) <= 0) continue;
      if (bland) return std::pair{j, d};
      if (!best || d > best->second) best = std::pair{j, d};
    }
    return best;
  }

  // B⁻¹ a_j.
  void compute_column(std::size_t j, std::vector<Rational>& column) const {
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational& c = column[r];
      if (j < targets_) {
        c = 0;
        for (EdgeId e : list_.targets[j].edges) {
          if (sgn(inverse_[r][e]) != 0) c += inverse_[r][e];
        }
      } else {
        c = inverse_[r][j - targets_];
      }
    }
  }

  // Minimum ratio; ties go to the smallest basic variable index (Bland).
  std::optional<std::size_t> choose_leaving(const std::vector<Rational>& column) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    Rational ratio;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn(column[r]) <= 0) continue;
      mpq_div(ratio.get_mpq_t(), rhs_[r].get_mpq_t(), column[r].get_mpq_t());
      int c = best ? cmp(ratio, best_ratio) : -1;
      if (c < 0 || (c == 0 && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t entering, const Rational& reduced, const std::vector<Rational>& column) {
    auto& prow = inverse_[row];
    const Rational inv = 1 / column[row];
    nonzero_.clear();
    for (std::size_t j = 0; j < rows_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nonzero_.push_back(j);
      }
    }
    rhs_[row] *= inv;

    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || sgn(column[r]) == 0) continue;
      axpy(inverse_[r], column[r], prow);
      mpq_mul(scratch_.get_mpq_t(), column[r].get_mpq_t(), rhs_[row].get_mpq_t());
      rhs_[r] -= scratch_;
    }
    // y += d_q · (new pivot row of B⁻¹), z += d_q · (new rhs of the pivot row).
    Rational neg = -reduced;
    axpy(dual_, neg, prow);
    objective_ += reduced * rhs_[row];

    in_basis_[basis_[row]] = false;
    in_basis_[entering] = true;
    basis_[row] = entering;
  }

  // target -= factor · source over the nonzero pattern of the pivot row.
  void axpy(std::vector<Rational>& target, const Rational& factor, const std::vector<Rational>& source) {
    for (std::size_t j : nonzero_) {
      mpq_mul(scratch_.get_mpq_t(), factor.get_mpq_t(), source[j].get_mpq_t());
      mpq_sub(target[j].get_mpq_t(), target[j].get_mpq_t(), scratch_.get_mpq_t());
    }
  }

  LpOptions options_;
  const TargetList& list_;
  std::size_t rows_;
  std::size_t targets_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<Rational> rhs_;
  std::vector<Rational> dual_;
  std::vector<std::size_t> basis_;
  std::vector<bool> in_basis_;
  std::vector<std::size_t> nonzero_;
  Rational objective_ = 0;
  Rational scratch_;
  std::size_t pivots_ = 0;
};

Rational sum(const std::vector<Rational>& xs) {
  Rational s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

}  // namespace

FractionalCover fractional_cover(const Graph& g, const TargetList& targets, const LpOptions& options) {
  if (targets.edge_count != g.m()) {
    throw Error(ErrorKind::MismatchedInstance, "target list was built for a different graph");
  }
  if (targets.size() + g.m() > options.size_cap) {
    throw Error(ErrorKind::LpTooLarge, std::to_string(targets.size()) + " targets + " + std::to_string(g.m()) +
                                           " edges exceeds cap " + std::to_string(options.size_cap));
  }
  FractionalCover cover;
  cover.family = targets.family;
  cover.dual_packing.family = targets.family;
  if (targets.empty()) {
    cover.weights.assign(g.m(), Rational(0));
    return cover;
  }

  PackingSimplex simplex(targets, options);
  simplex.solve();
  cover.weights = simplex.cover();
  cover.value = sum(cover.weights);
  cover.pivots = simplex.pivots();
  cover.dual_packing.weights = simplex.packing();
  cover.dual_packing.value = sum(cover.dual_packing.weights);

  ensure(cover.value == simplex.value() && cover.dual_packing.value == simplex.value(),
         "simplex: primal and dual objective differ");
  ensure(is_fractional_cover(targets, cover.weights), "simplex: extracted cover is infeasible");
  ensure(is_fractional_packing(targets, cover.dual_packing.weights), "simplex: extracted packing is infeasible");
  return cover;
}

FractionalPacking fractional_packing(const Graph& g, const TargetList& targets, const LpOptions& options) {
  return fractional_cover(g, targets, options).dual_packing;
}

EdgeClassification support_classes(const std::vector<Rational>& edge_weights, const Rational& threshold) {
  if (sgn(threshold) <= 0 || threshold > 1) {
    throw Error(ErrorKind::BadThreshold, "threshold " + to_string(threshold) + " not in (0,1]");
  }
  EdgeClassification out;
  out.threshold = threshold;
  for (EdgeId e = 0; e < edge_weights.size(); ++e) {
    if (sgn(edge_weights[e]) == 0) {
      out.zero.push_back(e);
    } else if (edge_weights[e] >= threshold) {
      out.heavy.push_back(e);
    } else {
      out.middle.push_back(e);
    }
  }
  return out;
}

EdgeClassification support_classes(const FractionalCover& cover, const Rational& threshold) {
  return support_classes(cover.weights, threshold);
}

SlacknessReport check_slackness(const TargetList& targets, const std::vector<Rational>& cover_weights,
                                const std::vector<Rational>& packing_weights) {
  if (cover_weights.size() != targets.edge_count || packing_weights.size() != targets.size()) {
    throw Error(ErrorKind::MismatchedInstance, "weights do not match the target list");
  }
  SlacknessReport report;
  for (EdgeId e = 0; e < cover_weights.size(); ++e) {
    if (sgn(cover_weights[e]) == 0) continue;
    Rational load = 0;
    for (auto t : targets.incidence[e]) load += packing_weights[t];
    if (load != 1) report.violations.push_back(e);
  }
  for (std::uint32_t t = 0; t < targets.size(); ++t) {
    if (sgn(packing_weights[t]) == 0) continue;
    Rational weight = 0;
    for (EdgeId e : targets.targets[t].edges) weight += cover_weights[e];
    if (weight != 1) report.target_violations.push_back(t);
  }
  return report;
}

SlacknessReport check_slackness(const TargetList& targets, const FractionalCover& cover,
                                const FractionalPacking& packing) {
  if (!(cover.family == targets.family) || !(packing.family == targets.family)) {
    throw Error(ErrorKind::MismatchedInstance, "families differ");
  }
  return check_slackness(targets, cover.weights, packing.weights);
}

bool is_fractional_cover(const TargetList& targets, const std::vector<Rational>& edge_weights) {
  if (edge_weights.size() != targets.edge_count) return false;
  for (const auto& w : edge_weights) {
    if (sgn(w) < 0 || w > 1) return false;
  }
  for (const auto& t : targets.targets) {
    Rational s = 0;
    for (EdgeId e : t.edges) s += edge_weights[e];
    if (s < 1) return false;
  }
  return true;
}

bool is_fractional_packing(const TargetList& targets, const std::vector<Rational>& target_weights) {
  if (target_weights.size() != targets.size()) return false;
  for (const auto& w : target_weights) {
    if (sgn(w) < 0) return false;
  }
  for (const auto& inc : targets.incidence) {
    Rational s = 0;
    for (auto t : inc) s += target_weights[t];
    if (s > 1) return false;
  }
  return true;
}

}  // namespace tuza
