#include "tuza/graph.hpp"

#include "tuza/error.hpp"
#include "tuza/rng.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace tuza {

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw Error(ErrorKind::InvalidSpec, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                              ") has an endpoint >= n=" + std::to_string(n));
    }
    if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") repeated");
  }
  neighbors_.assign(n, {});
  incident_.assign(n, {});
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(n);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adj[edges_[e].u].emplace_back(edges_[e].v, e);
    adj[edges_[e].v].emplace_back(edges_[e].u, e);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    neighbors_[v].reserve(adj[v].size());
    incident_[v].reserve(adj[v].size());
    for (auto [w, e] : adj[v]) {
      neighbors_[v].push_back(w);
      incident_[v].push_back(e);
    }
  }
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u >= n() || v >= n() || u == v) return std::nullopt;
  const auto& nb = neighbors_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_[u][static_cast<std::size_t>(it - nb.begin())];
}

std::pair<Graph, std::vector<EdgeId>> Graph::spanning_subgraph(const std::vector<bool>& keep) const {
  std::vector<std::pair<Vertex, Vertex>> kept;
  std::vector<EdgeId> map;
  for (EdgeId e = 0; e < m(); ++e) {
    if (keep[e]) {
      kept.emplace_back(edges_[e].u, edges_[e].v);
      map.push_back(e);
    }
  }
  return {Graph(n(), std::move(kept)), std::move(map)};
}

Graph Graph::without_edges(const std::vector<EdgeId>& removed) const {
  std::vector<bool> keep(m(), true);
  for (EdgeId e : removed) keep.at(e) = false;
  return spanning_subgraph(keep).first;
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << "n " << n() << '\n';
  for (const Edge& e : edges_) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  std::size_t header_n = 0;
  std::size_t max_id_plus_one = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;

  auto parse_uint = [&](std::string_view tok) -> std::uint64_t {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value > UINT32_MAX - 1) {
      throw Error(ErrorKind::MalformedLine,
                  "line " + std::to_string(line_no) + ": bad integer '" + std::string(tok) + "'");
    }
    return value;
  };

  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = line.substr(0, line.find('#'));

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) {
        throw Error(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": expected 'n <count>'");
      }
      header_n = parse_uint(tokens[1]);
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    auto u = static_cast<Vertex>(parse_uint(tokens[0]));
    auto v = static_cast<Vertex>(parse_uint(tokens[1]));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + std::size_t{1});
    edges.emplace_back(u, v);
  }
  return Graph(std::max(header_n, max_id_plus_one), std::move(edges));
}

// ---------------------------------------------------------------------------

TargetFamily::TargetFamily(TargetKind kind, int k) : kind_(kind), k_(k) {
  if (k < 3) throw Error(ErrorKind::InvalidSpec, "target size k must be >= 3");
  if (kind == TargetKind::OddCycle && k % 2 == 0) {
    throw Error(ErrorKind::InvalidSpec, "odd cycle family needs odd k, got " + std::to_string(k));
  }
  if (kind == TargetKind::OddCycle && k == 3) kind_ = TargetKind::Clique;
}

int TargetFamily::edges_per_target() const noexcept {
  return kind_ == TargetKind::Clique ? k_ * (k_ - 1) / 2 : k_;
}

int TargetFamily::edges_per_vertex() const noexcept {
  return kind_ == TargetKind::Clique ? k_ - 1 : 2;
}

int TargetFamily::partite_bound() const noexcept {
  return kind_ == TargetKind::Clique ? k_ - 1 : 2;
}

std::string TargetFamily::name() const {
  return (kind_ == TargetKind::Clique ? "K" : "C") + std::to_string(k_);
}

TargetFamily TargetFamily::parse(std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::InvalidSpec, "unknown family '" + std::string(text) + "'"); };
  if (text == "triangle" || text == "triangles") return triangles();
  if (text.size() < 2) throw bad();
  int k = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), k);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw bad();
  switch (text[0]) {
    case 'K': case 'k': return clique(k);
    case 'C': case 'c': return odd_cycle(k);
    default: throw bad();
  }
}

// ---------------------------------------------------------------------------

namespace {

class Enumerator {
public:
  Enumerator(const Graph& g, const TargetFamily& family, std::size_t cap, bool stop_at_first)
      : g_(g), family_(family), cap_(cap), stop_at_first_(stop_at_first) {
    out_.family = family;
    out_.edge_count = g.m();
  }

  TargetList run() {
    if (family_.kind() == TargetKind::Clique) {
      for (Vertex v = 0; v < g_.n() && !done_; ++v) {
        std::vector<Vertex> cand;
        for (Vertex w : g_.neighbors(v)) {
          if (w > v) cand.push_back(w);
        }
        clique_.assign(1, v);
        extend_clique(cand);
      }
    } else {
      std::vector<bool> on_path(g_.n(), false);
      for (Vertex r = 0; r < g_.n() && !done_; ++r) {
        path_.assign(1, r);
        on_path[r] = true;
        extend_cycle(r, on_path);
        on_path[r] = false;
      }
    }
    out_.incidence.assign(g_.m(), {});
    for (std::uint32_t t = 0; t < out_.targets.size(); ++t) {
      for (EdgeId e : out_.targets[t].edges) out_.incidence[e].push_back(t);
    }
    return std::move(out_);
  }

private:
  void emit(const std::vector<Vertex>& vertices, bool cyclic) {
    if (out_.targets.size() >= cap_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "more than " + std::to_string(cap_) + " " + family_.name() + " targets");
    }
    Target t;
    t.vertices = vertices;
    if (cyclic) {
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        t.edges.push_back(*g_.edge_id(vertices[i], vertices[(i + 1) % vertices.size()]));
      }
    } else {
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
          t.edges.push_back(*g_.edge_id(vertices[i], vertices[j]));
        }
      }
    }
    std::sort(t.edges.begin(), t.edges.end());
    out_.targets.push_back(std::move(t));
    if (stop_at_first_) done_ = true;
  }

  void extend_clique(const std::vector<Vertex>& cand) {
    if (clique_.size() == static_cast<std::size_t>(family_.k())) {
      emit(clique_, false);
      return;
    }
    if (clique_.size() + cand.size() < static_cast<std::size_t>(family_.k())) return;
    for (std::size_t i = 0; i < cand.size() && !done_; ++i) {
      Vertex w = cand[i];
      std::vector<Vertex> next;
      const auto& nb = g_.neighbors(w);
      std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), nb.begin(),
                            nb.end(), std::back_inserter(next));
      clique_.push_back(w);
      extend_clique(next);
      clique_.pop_back();
    }
  }

  // Simple paths r = p0, p1, ..., with every p_i > r. A cycle closes when the
  // path has k vertices and the last is adjacent to r; requiring p1 < p_{k-1}
  // picks one of the two orientations, so each cycle is emitted once, already
  // in canonical (lexicographically least rotation/reflection) form.
  void extend_cycle(Vertex root, std::vector<bool>& on_path) {
    const auto k = static_cast<std::size_t>(family_.k());
    Vertex last = path_.back();
    if (path_.size() == k) {
      if (path_[1] < last && g_.adjacent(last, root)) emit(path_, true);
      return;
    }
    for (Vertex w : g_.neighbors(last)) {
      if (done_) return;
      if (w <= root || on_path[w]) continue;
      if (path_.size() >= 2 && w < path_[1] && path_.size() + 1 == k) continue;
      on_path[w] = true;
      path_.push_back(w);
      extend_cycle(root, on_path);
      path_.pop_back();
      on_path[w] = false;
    }
  }

  const Graph& g_;
  TargetFamily family_;
  std::size_t cap_;
  bool stop_at_first_;
  bool done_ = false;
  std::vector<Vertex> clique_;
  std::vector<Vertex> path_;
  TargetList out_;
};

}  // namespace

TargetList enumerate_targets(const Graph& g, const TargetFamily& family, std::size_t cap) {
  return Enumerator(g, family, cap, false).run();
}

bool has_target(const Graph& g, const TargetFamily& family) {
  return !Enumerator(g, family, kDefaultEnumerationCap, true).run().empty();
}

Rational density(const Graph& g) {
  if (g.n() == 0) throw Error(ErrorKind::EmptyGraph, "density of a graph with no vertices");
  Rational beta(static_cast<unsigned long>(g.m()), static_cast<unsigned long>(g.n() * g.n()));
  beta.canonicalize();
  return beta;
}

// ---------------------------------------------------------------------------

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidSpec, "cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
  auto shift = static_cast<Vertex>(a.n());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.n() + b.n(), std::move(edges));
}

namespace {

struct Builder {
  Graph operator()(const CompleteSpec& s) const { return complete_graph(s.n); }

  Graph operator()(const MultipartiteSpec& s) const {
    std::size_t n = 0;
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < s.parts.size(); ++i) {
      part_of.insert(part_of.end(), s.parts[i], i);
      n += s.parts[i];
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
      }
    }
    return Graph(n, std::move(edges));
  }

  Graph operator()(const GnpSpec& s) const {
    check_p(s.p);
    Rng rng(s.seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < s.n; ++u) {
      for (Vertex v = u + 1; v < s.n; ++v) {
        if (rng.unit() < s.p) edges.emplace_back(u, v);
      }
    }
    return Graph(s.n, std::move(edges));
  }

  Graph operator()(const BipartiteGnpSpec& s) const {
    check_p(s.p);
    Rng rng(s.seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < s.left; ++u) {
      for (std::size_t j = 0; j < s.right; ++j) {
        if (rng.unit() < s.p) edges.emplace_back(u, static_cast<Vertex>(s.left + j));
      }
    }
    return Graph(s.left + s.right, std::move(edges));
  }

  Graph operator()(const CycleSpec& s) const { return cycle_graph(s.n); }

  Graph operator()(const BlowupSpec& s) const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    const auto t = static_cast<Vertex>(s.t);
    for (const Edge& e : s.base.edges()) {
      for (Vertex i = 0; i < t; ++i) {
        for (Vertex j = 0; j < t; ++j) edges.emplace_back(e.u * t + i, e.v * t + j);
      }
    }
    return Graph(s.base.n() * s.t, std::move(edges));
  }

  static void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidSpec, "edge probability outside [0,1]");
  }
};

}  // namespace

Graph generate(const GeneratorSpec& spec) { return std::visit(Builder{}, spec); }

std::string describe(const GeneratorSpec& spec) {
  struct Describer {
    std::string operator()(const CompleteSpec& s) const { return "complete(n=" + std::to_string(s.n) + ")"; }
    std::string operator()(const MultipartiteSpec& s) const {
      std::string out = "complete_multipartite(parts=";
      for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? "+" : "") + std::to_string(s.parts[i]);
      return out + ")";
    }
    std::string operator()(const GnpSpec& s) const {
      std::ostringstream out;
      out << "gnp(n=" << s.n << ";p=" << s.p << ";seed=" << s.seed << ")";
      return out.str();
    }
    std::string operator()(const BipartiteGnpSpec& s) const {
      std::ostringstream out;
      out << "bipartite_gnp(left=" << s.left << ";right=" << s.right << ";p=" << s.p << ";seed=" << s.seed << ")";
      return out.str();
    }
    std::string operator()(const CycleSpec& s) const { return "cycle(n=" + std::to_string(s.n) + ")"; }
    std::string operator()(const BlowupSpec& s) const {
      return "blowup(base_n=" + std::to_string(s.base.n()) + ";base_m=" + std::to_string(s.base.m()) +
             ";t=" + std::to_string(s.t) + ")";
    }
  };
  return std::visit(Describer{}, spec);
}

}  // namespace tuza
