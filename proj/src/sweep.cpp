#include "tuza/sweep.hpp"

#include "tuza/approx.hpp"
#include "tuza/error.hpp"
#include "tuza/hardness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace tuza {

using nlohmann::json;

namespace {

Rational rational(std::size_t x) { return Rational(static_cast<unsigned long>(x)); }

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::ConfigInvalid, what); }

template <class T>
std::vector<T> as_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& v = j.at(key);
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

GeneratorSpec single_spec(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "complete") return CompleteSpec{j.at("n").get<std::size_t>()};
  if (type == "cycle") return CycleSpec{j.at("n").get<std::size_t>()};
  if (type == "multipartite") return MultipartiteSpec{j.at("parts").get<std::vector<std::size_t>>()};
  if (type == "petersen") return BlowupSpec{petersen_graph(), 1};
  invalid("unsupported blowup base type '" + type + "'");
}

// Cartesian expansion of one grid; `seed` feeds the random generators.
std::vector<GeneratorSpec> expand(const GeneratorGrid& grid, std::uint64_t seed) {
  std::vector<GeneratorSpec> out;
  if (grid.type == "complete") {
    for (auto n : grid.n) out.emplace_back(CompleteSpec{n});
  } else if (grid.type == "cycle") {
    for (auto n : grid.n) out.emplace_back(CycleSpec{n});
  } else if (grid.type == "petersen") {
    out.emplace_back(BlowupSpec{petersen_graph(), 1});
  } else if (grid.type == "multipartite") {
    for (const auto& parts : grid.parts) out.emplace_back(MultipartiteSpec{parts});
  } else if (grid.type == "gnp") {
    for (auto n : grid.n) {
      for (auto p : grid.p) out.emplace_back(GnpSpec{n, p, seed});
    }
  } else if (grid.type == "bipartite_gnp") {
    for (auto n : grid.n) {
      for (auto p : grid.p) out.emplace_back(BipartiteGnpSpec{n / 2, n - n / 2, p, seed});
    }
  } else if (grid.type == "blowup") {
    if (!grid.base) invalid("blowup grid needs a base");
    Graph base = generate(*grid.base);
    for (auto t : grid.t) out.emplace_back(BlowupSpec{base, t});
  } else {
    invalid("unknown generator type '" + grid.type + "'");
  }
  return out;
}

std::string opt_str(const std::optional<std::string>& v) { return v.value_or(""); }
std::string opt_num(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_bool(const std::optional<bool>& v) { return v ? (*v ? "1" : "0") : ""; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

const std::vector<std::string>& columns() {
  static const std::vector<std::string> cols = {
      "id",        "generator",   "seed",        "family",       "n",           "m",
      "beta",      "targets",     "tau_star",    "nu_star",      "tau_lower",   "tau_upper",
      "tau_optimal", "nu_lower",  "nu_upper",    "nu_optimal",   "delta_lo",    "delta_hi",
      "approx_cover", "ratio_bound", "case_label", "witness_size", "witness_threshold_met",
      "rho_lo",    "rho_hi",      "rho_star",    "error",        "wall_ms"};
  return cols;
}

std::vector<std::string> row(const InstanceRecord& r) {
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << r.wall_ms;
  return {std::to_string(r.id),    r.generator,          std::to_string(r.seed),  r.family,
          std::to_string(r.n),     std::to_string(r.m),  r.beta,                  std::to_string(r.targets),
          opt_str(r.tau_star),     opt_str(r.nu_star),   opt_num(r.tau_lower),    opt_num(r.tau_upper),
          r.tau_optimal ? "1" : "0", opt_num(r.nu_lower), opt_num(r.nu_upper),    r.nu_optimal ? "1" : "0",
          opt_str(r.delta_lo),     opt_str(r.delta_hi),  opt_num(r.approx_cover), opt_str(r.ratio_bound),
          opt_str(r.case_label),   opt_num(r.witness_size), opt_bool(r.witness_threshold_met),
          opt_num(r.rho_lo),       opt_num(r.rho_hi),    opt_str(r.rho_star),     r.error,
          ms.str()};
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    invalid("bad integer field '" + s + "'");
  }
  if (pos != s.size()) invalid("bad integer field '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::optional<std::string> get_str(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}
std::optional<std::size_t> get_num(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return to_size(s);
}
bool get_flag(const std::string& s) {
  if (s != "0" && s != "1") invalid("bad flag field '" + s + "'");
  return s == "1";
}

Rational q(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    invalid("bad rational field '" + s + "'");
  }
}

}  // namespace

SweepConfig SweepConfig::from_json(const json& j) {
  SweepConfig cfg;
  try {
    if (j.contains("family")) cfg.family = TargetFamily::parse(j.at("family").get<std::string>());
    if (j.contains("seeds")) cfg.seeds = as_list<std::uint64_t>(j, "seeds");
    if (j.contains("solvers")) {
      const json& s = j.at("solvers");
      cfg.solvers = Solvers{false, false, false, false};
      for (const auto& name : s.get<std::vector<std::string>>()) {
        if (name == "exact") cfg.solvers.exact = true;
        else if (name == "lp") cfg.solvers.lp = true;
        else if (name == "approx") cfg.solvers.approx = true;
        else if (name == "hardness") cfg.solvers.hardness = true;
        else invalid("unknown solver '" + name + "'");
      }
    }
    if (j.contains("budget_nodes")) cfg.budget.node_cap = j.at("budget_nodes").get<std::uint64_t>();
    if (j.contains("budget_ms")) cfg.budget.time_cap = std::chrono::milliseconds(j.at("budget_ms").get<long>());
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<std::size_t>();
    for (const auto& g : j.value("generators", json::array())) {
      GeneratorGrid grid;
      grid.type = g.at("type").get<std::string>();
      grid.n = as_list<std::size_t>(g, "n");
      grid.p = as_list<double>(g, "p");
      grid.t = as_list<std::size_t>(g, "t");
      if (g.contains("parts")) {
        const json& parts = g.at("parts");
        if (!parts.empty() && parts.front().is_array()) {
          grid.parts = parts.get<std::vector<std::vector<std::size_t>>>();
        } else {
          grid.parts = {parts.get<std::vector<std::size_t>>()};
        }
      }
      if (g.contains("base")) grid.base = single_spec(g.at("base"));
      cfg.grids.push_back(std::move(grid));
    }
  } catch (const json::exception& e) {
    invalid(std::string("config: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigInvalid) throw;
    invalid(e.what());
  }
  return cfg;
}

InstanceRecord run_instance(std::size_t id, const GeneratorSpec& spec, std::uint64_t seed, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  InstanceRecord r;
  r.id = id;
  r.generator = describe(spec);
  r.seed = seed;
  r.family = config.family.name();
  try {
    Graph g = generate(spec);
    r.n = g.n();
    r.m = g.m();
    r.beta = g.n() == 0 ? "0" : to_string(density(g));
    TargetList targets = enumerate_targets(g, config.family);
    r.targets = targets.size();

    std::optional<FractionalCover> cover;
    if (config.solvers.lp) {
      cover = fractional_cover(g, targets, config.lp);
      r.tau_star = to_string(cover->value);
      r.nu_star = to_string(cover->dual_packing.value);
      r.tau_lower = ceil(cover->value).get_ui();
      r.nu_upper = floor(cover->dual_packing.value).get_ui();
    }
    if (config.solvers.exact) {
      CoverSolution c = exact_cover(g, targets, config.budget);
      PackingSolution p = exact_packing(g, targets, config.budget);
      r.tau_upper = c.size();
      r.tau_optimal = c.optimal;
      r.nu_lower = p.size();
      r.nu_optimal = p.optimal;
      if (c.optimal) r.tau_lower = c.size();
      if (p.optimal) r.nu_upper = p.size();
    }
    if (config.solvers.approx) {
      std::size_t approx = 0;
      if (config.family.kind() == TargetKind::Clique && cover) {
        ProcessResult process = kk_cover_process(g, config.family.k(), seed, config.lp);
        approx = process.cover.size();
        r.ratio_bound = to_string(process.trace.ratio_bound);
      } else {
        approx = bipartize(g, seed).removed_count();
      }
      r.approx_cover = approx;
      if (!r.tau_upper || approx < *r.tau_upper) r.tau_upper = approx;
      std::size_t greedy = greedy_packing(targets, seed).size();
      if (!r.nu_lower || greedy > *r.nu_lower) r.nu_lower = greedy;
    }
    if (r.tau_lower && r.tau_upper) {
      r.delta_lo = to_string(hardness_delta(rational(*r.tau_upper), r.m, config.family));
      r.delta_hi = to_string(hardness_delta(rational(*r.tau_lower), r.m, config.family));
      r.rho_lo = r.m - *r.tau_upper;
      r.rho_hi = r.m - *r.tau_lower;
    }
    if (cover) r.rho_star = to_string(rational(r.m) - cover->value);

    if (config.solvers.hardness && cover && config.family.is_triangle() && r.m > 0) {
      const Rational beta = density(g);
      r.case_label = to_string(classify_case(*cover, beta, delta_of_beta(beta)).label);
      try {
        Graph h = zero_weight_subgraph(g, cover->weights);
        BipartiteWitness w = find_bipartite_witness(h, config.family, beta, seed);
        r.witness_size = w.size();
        r.witness_threshold_met = w.threshold_met;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InsufficientDensity) throw;
      }
    }
  } catch (const Error& e) {
    r.error = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<InstanceRecord> run_sweep(const SweepConfig& config) {
  if (config.grids.empty()) invalid("empty generator grid");
  if (config.seeds.empty()) invalid("empty seed list");
  if (config.budget.node_cap == 0 || config.budget.time_cap.count() <= 0) invalid("budgets must be positive");

  struct Job {
    GeneratorSpec spec;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& grid : config.grids) {
    // Deterministic generators still get one row per seed; the seed drives
    // the randomized solvers.
    for (auto seed : config.seeds) {
      for (auto& spec : expand(grid, seed)) jobs.push_back({std::move(spec), seed});
    }
  }
  if (jobs.empty()) invalid("generator grid expands to no instances");

  std::vector<InstanceRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      records[i] = run_instance(i, jobs[i].spec, jobs[i].seed, config);
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.jobs, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "plotdata") return ReportFormat::PlotData;
  throw Error(ErrorKind::InvalidSpec, "unknown report format '" + name + "'");
}

std::string to_csv(const std::vector<InstanceRecord>& records) {
  std::ostringstream out;
  out << kCsvSchema << '\n';
  const auto& cols = columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : records) {
    auto fields = row(r);
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i]);
    out << '\n';
  }
  return out.str();
}

json to_json(const std::vector<InstanceRecord>& records) {
  json out = json::array();
  const auto& cols = columns();
  for (const auto& r : records) {
    json obj = json::object();
    auto fields = row(r);
    for (std::size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = fields[i];
    obj["wall_ms"] = r.wall_ms;
    out.push_back(std::move(obj));
  }
  return out;
}

std::string to_plotdata(const std::vector<InstanceRecord>& records) {
  std::ostringstream out;
  out << "# beta nu_over_m bound_(1+beta^2/800)/4\n";
  out << std::setprecision(10);
  for (const auto& r : records) {
    if (r.m == 0 || !r.nu_lower || r.beta.empty()) continue;
    const Rational beta = q(r.beta);
    const Rational fraction = rational(*r.nu_lower) / rational(r.m);
    const Rational bound = (1 + beta * beta / 800) / 4;
    out << to_double(beta) << ' ' << to_double(fraction) << ' ' << to_double(bound) << '\n';
  }
  return out.str();
}

void emit_report(const std::vector<InstanceRecord>& records, ReportFormat format, const std::filesystem::path& path) {
  if (records.empty()) throw Error(ErrorKind::InvalidSpec, "no records to report");
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::OutputUnwritable, "cannot open " + path.string());
  switch (format) {
    case ReportFormat::Csv: out << to_csv(records); break;
    case ReportFormat::Json: out << to_json(records).dump(2) << '\n'; break;
    case ReportFormat::PlotData: out << to_plotdata(records); break;
  }
  if (!out) throw Error(ErrorKind::OutputUnwritable, "write failed for " + path.string());
}

namespace {

InstanceRecord from_fields(const std::vector<std::string>& f) {
  if (f.size() != columns().size()) invalid("row has " + std::to_string(f.size()) + " fields");
  InstanceRecord r;
  r.id = to_size(f[0]);
  r.generator = f[1];
  r.seed = to_size(f[2]);
  r.family = f[3];
  r.n = to_size(f[4]);
  r.m = to_size(f[5]);
  r.beta = f[6];
  r.targets = to_size(f[7]);
  r.tau_star = get_str(f[8]);
  r.nu_star = get_str(f[9]);
  r.tau_lower = get_num(f[10]);
  r.tau_upper = get_num(f[11]);
  r.tau_optimal = get_flag(f[12]);
  r.nu_lower = get_num(f[13]);
  r.nu_upper = get_num(f[14]);
  r.nu_optimal = get_flag(f[15]);
  r.delta_lo = get_str(f[16]);
  r.delta_hi = get_str(f[17]);
  r.approx_cover = get_num(f[18]);
  r.ratio_bound = get_str(f[19]);
  r.case_label = get_str(f[20]);
  r.witness_size = get_num(f[21]);
  if (!f[22].empty()) r.witness_threshold_met = get_flag(f[22]);
  r.rho_lo = get_num(f[23]);
  r.rho_hi = get_num(f[24]);
  r.rho_star = get_str(f[25]);
  r.error = f[26];
  try {
    r.wall_ms = std::stod(f[27]);
  } catch (const std::exception&) {
    invalid("bad wall_ms field");
  }
  return r;
}

}  // namespace

long integrality_factor(const TargetFamily& family) {
  return family.kind() == TargetKind::Clique ? mantel_bound(family.k()) : family.k() - 1;
}

void verify_record(const InstanceRecord& r) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::InvariantViolation, "record " + std::to_string(r.id) + ": " + what);
  };
  if (!r.error.empty()) return;
  const TargetFamily family = TargetFamily::parse(r.family);
  if (r.n > 0) {
    Rational beta(static_cast<unsigned long>(r.m), static_cast<unsigned long>(r.n * r.n));
    beta.canonicalize();
    if (q(r.beta) != beta) fail("beta is not m/n^2");
  }
  if (r.tau_star.has_value() != r.nu_star.has_value()) fail("tau* and nu* must appear together");
  std::optional<Rational> tau_star;
  if (r.tau_star) {
    tau_star = q(*r.tau_star);
    if (*tau_star != q(*r.nu_star)) fail("tau* != nu*");
  }
  const auto per_target = static_cast<std::size_t>(family.edges_per_target());
  if (r.nu_lower && r.tau_upper && *r.nu_lower > *r.tau_upper) fail("nu > tau");
  if (r.tau_lower && r.nu_upper && *r.tau_lower > per_target * *r.nu_upper) fail("tau > C(k,2) nu");
  if (r.tau_lower && r.tau_upper && *r.tau_lower > *r.tau_upper) fail("tau bounds crossed");
  if (r.nu_lower && r.nu_upper && *r.nu_lower > *r.nu_upper) fail("nu bounds crossed");
  if (tau_star) {
    const Rational factor(integrality_factor(family));
    if (r.tau_lower && rational(*r.tau_lower) > factor * *tau_star) fail("tau > factor * nu*");
    if (r.nu_lower && rational(*r.nu_lower) > *tau_star) fail("nu > nu*");
    if (r.tau_lower && rational(*r.tau_lower) < *tau_star) fail("tau lower bound below tau*");
    if (r.approx_cover && r.ratio_bound) {
      if (q(*r.ratio_bound) != Rational(mantel_bound(family.k())) * *tau_star) fail("ratio bound mismatch");
      if (rational(*r.approx_cover) > q(*r.ratio_bound)) fail("approx cover exceeds floor(k^2/4) tau*");
    }
    if (r.rho_star && q(*r.rho_star) != rational(r.m) - *tau_star) fail("rho* != m - tau*");
  }
  if (r.rho_lo && (!r.tau_upper || *r.rho_lo + *r.tau_upper != r.m)) fail("rho_lo != m - tau_upper");
  if (r.rho_hi && (!r.tau_lower || *r.rho_hi + *r.tau_lower != r.m)) fail("rho_hi != m - tau_lower");
}

std::vector<InstanceRecord> load_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvSchema) invalid("missing schema line");
  if (!std::getline(in, line) || csv_split(line) != columns()) invalid("unexpected header");
  std::vector<InstanceRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(from_fields(csv_split(line)));
    verify_record(records.back());
  }
  return records;
}

std::vector<InstanceRecord> records_from_json(const json& j) {
  std::vector<InstanceRecord> records;
  const auto& cols = columns();
  for (const auto& obj : j) {
    std::vector<std::string> fields;
    for (const auto& c : cols) {
      if (c == "wall_ms") {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(3) << obj.at(c).get<double>();
        fields.push_back(ms.str());
      } else {
        fields.push_back(obj.at(c).get<std::string>());
      }
    }
    records.push_back(from_fields(fields));
    verify_record(records.back());
  }
  return records;
}

}  // namespace tuza
