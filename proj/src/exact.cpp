#include "tuza/exact.hpp"

#include "tuza/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <bit>
#include <optional>

namespace tuza {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class Clock {
public:
  explicit Clock(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {
    if (budget.node_cap == 0 || budget.time_cap.count() <= 0) {
      throw Error(ErrorKind::InvalidSpec, "budget caps must be positive");
    }
  }

  // Counts one search node; true once either cap is exhausted.
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.node_cap) return exhausted_ = true;
    if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_cap) {
      exhausted_ = true;
    }
    return exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::vector<Bits> target_bits(const TargetList& targets) {
  std::vector<Bits> bits;
  bits.reserve(targets.size());
  for (const auto& t : targets.targets) {
    Bits b(targets.edge_count);
    for (EdgeId e : t.edges) b.set(e);
    bits.push_back(std::move(b));
  }
  return bits;
}

class CoverSearch {
public:
  CoverSearch(const TargetList& targets, const Budget& budget)
      : targets_(targets), bits_(target_bits(targets)), clock_(budget) {}

  CoverSolution run() {
    CoverSolution out;
    out.family = targets_.family;
    best_ = greedy();
    Bits chosen(targets_.edge_count);
    Bits forbidden(targets_.edge_count);
    search(chosen, forbidden, 0);
    out.edges = best_;
    out.optimal = !clock_.exhausted();
    out.nodes = clock_.nodes();
    return out;
  }

private:
  // Repeatedly take the edge hitting the most unhit targets.
  std::vector<EdgeId> greedy() const {
    std::vector<bool> hit(targets_.size(), false);
    std::vector<EdgeId> cover;
    std::size_t remaining = targets_.size();
    while (remaining > 0) {
      EdgeId best = 0;
      std::size_t best_count = 0;
      for (EdgeId e = 0; e < targets_.edge_count; ++e) {
        std::size_t c = 0;
        for (auto t : targets_.incidence[e]) c += hit[t] ? 0 : 1;
        if (c > best_count) {
          best_count = c;
          best = e;
        }
      }
      cover.push_back(best);
      for (auto t : targets_.incidence[best]) {
        if (!hit[t]) {
          hit[t] = true;
          --remaining;
        }
      }
    }
    std::sort(cover.begin(), cover.end());
    return cover;
  }

  void search(Bits& chosen, Bits& forbidden, std::size_t depth) {
    if (clock_.tick()) return;

    // Lower bound: unhit targets that are pairwise disjoint on allowed edges
    // each need their own cover edge.
    std::optional<std::size_t> branch_target;
    Bits used(targets_.edge_count);
    std::size_t disjoint = 0;
    for (std::size_t t = 0; t < bits_.size(); ++t) {
      if (bits_[t].intersects(chosen)) continue;
      Bits allowed = bits_[t] - forbidden;
      if (allowed.none()) return;  // unhittable in this branch
      if (!branch_target) branch_target = t;
      if (!allowed.intersects(used)) {
        used |= allowed;
        ++disjoint;
      }
    }
    if (!branch_target) {
      if (depth < best_.size()) {
        best_.clear();
        for (auto e = chosen.find_first(); e != Bits::npos; e = chosen.find_next(e)) {
          best_.push_back(static_cast<EdgeId>(e));
        }
      }
      return;
    }
    if (depth + disjoint >= best_.size()) return;

    std::vector<EdgeId> newly_forbidden;
    for (EdgeId e : targets_.targets[*branch_target].edges) {
      if (forbidden.test(e)) continue;
      chosen.set(e);
      search(chosen, forbidden, depth + 1);
      chosen.reset(e);
      if (clock_.exhausted()) break;
      forbidden.set(e);
      newly_forbidden.push_back(e);
    }
    for (EdgeId e : newly_forbidden) forbidden.reset(e);
  }

  const TargetList& targets_;
  std::vector<Bits> bits_;
  Clock clock_;
  std::vector<EdgeId> best_;
};

class PackingSearch {
public:
  PackingSearch(const Graph& g, const TargetList& targets, const Budget& budget)
      : targets_(targets), bits_(target_bits(targets)), clock_(budget) {
    vertex_edges_.reserve(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
      Bits b(targets.edge_count);
      for (EdgeId e : g.incident_edges(v)) b.set(e);
      vertex_edges_.push_back(std::move(b));
    }
  }

  PackingSolution run() {
    PackingSolution out;
    out.family = targets_.family;
    Bits used(targets_.edge_count);
    std::vector<std::uint32_t> current;
    search(0, used, current);
    out.targets = best_;
    out.optimal = !clock_.exhausted();
    out.nodes = clock_.nodes();
    return out;
  }

private:
  std::size_t upper_bound(std::size_t from, const Bits& used, std::size_t& compatible) const {
    Bits live(targets_.edge_count);
    compatible = 0;
    for (std::size_t t = from; t < bits_.size(); ++t) {
      if (bits_[t].intersects(used)) continue;
      live |= bits_[t];
      ++compatible;
    }
    const auto per_target = static_cast<std::size_t>(targets_.family.edges_per_target());
    const auto per_vertex = static_cast<std::size_t>(targets_.family.edges_per_vertex());
    const auto k = static_cast<std::size_t>(targets_.family.k());
    std::size_t by_edges = live.count() / per_target;
    // A target uses edges_per_vertex edges at each of its k vertices.
    std::size_t vertex_slots = 0;
    for (std::size_t v = 0; v < vertex_edges_.size(); ++v) {
      vertex_slots += (vertex_edges_[v] & live).count() / per_vertex;
    }
    return std::min({compatible, by_edges, vertex_slots / k});
  }

  void search(std::size_t from, Bits& used, std::vector<std::uint32_t>& current) {
    if (clock_.tick()) return;
    if (current.size() > best_.size()) best_ = current;
    std::size_t compatible = 0;
    std::size_t bound = upper_bound(from, used, compatible);
    if (current.size() + bound <= best_.size()) return;

    std::size_t t = from;
    while (t < bits_.size() && bits_[t].intersects(used)) ++t;
    if (t == bits_.size()) return;

    used |= bits_[t];
    current.push_back(static_cast<std::uint32_t>(t));
    search(t + 1, used, current);
    current.pop_back();
    used -= bits_[t];
    if (clock_.exhausted()) return;
    search(t + 1, used, current);
  }

  const TargetList& targets_;
  std::vector<Bits> bits_;
  Clock clock_;
  std::vector<Bits> vertex_edges_;
  std::vector<std::uint32_t> best_;
};

}  // namespace

CoverSolution exact_cover(const Graph& g, const TargetList& targets, const Budget& budget) {
  if (targets.edge_count != g.m()) throw Error(ErrorKind::MismatchedInstance, "targets built for another graph");
  return CoverSearch(targets, budget).run();
}

PackingSolution exact_packing(const Graph& g, const TargetList& targets, const Budget& budget) {
  if (targets.edge_count != g.m()) throw Error(ErrorKind::MismatchedInstance, "targets built for another graph");
  return PackingSearch(g, targets, budget).run();
}

MaxCut max_cut_exact(const Graph& g, const Budget& budget) {
  Clock clock(budget);
  const std::size_t n = g.n();
  MaxCut best;
  best.side.assign(n, 0);
  best.optimal = true;
  if (n <= 1) return best;

  std::vector<std::uint8_t> side(n, 0);
  long long cut = 0;
  long long best_cut = 0;
  // Gray code over vertices 0..n-2; step i flips the lowest set bit of i.
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    if (clock.tick()) {
      best.optimal = false;
      break;
    }
    auto v = static_cast<Vertex>(std::countr_zero(i));
    long long same = 0;
    long long cross = 0;
    for (Vertex w : g.neighbors(v)) (side[w] == side[v] ? same : cross) += 1;
    cut += same - cross;
    side[v] ^= 1;
    if (cut > best_cut) {
      best_cut = cut;
      best.side = side;
    }
  }
  best.value = static_cast<std::size_t>(best_cut);
  return best;
}

bool verify_cover(const Graph& g, const TargetFamily& family, const std::vector<EdgeId>& cover) {
  return !has_target(g.without_edges(cover), family);
}

bool verify_packing(const Graph& g, const TargetList& targets, const std::vector<std::uint32_t>& chosen) {
  std::vector<bool> used(g.m(), false);
  for (auto t : chosen) {
    if (t >= targets.size()) return false;
    const auto& target = targets.targets[t];
    const auto& vs = target.vertices;
    for (EdgeId e : target.edges) {
      if (e >= g.m() || used[e]) return false;
      const Edge& edge = g.edge(e);
      bool endpoints_in_target = std::find(vs.begin(), vs.end(), edge.u) != vs.end() &&
                                 std::find(vs.begin(), vs.end(), edge.v) != vs.end();
      if (!endpoints_in_target) return false;
      used[e] = true;
    }
  }
  return true;
}

}  // namespace tuza
