// Command-line front end: one subcommand per analysis, text or JSON output.

#include "tuza/approx.hpp"
#include "tuza/error.hpp"
#include "tuza/exact.hpp"
#include "tuza/graph.hpp"
#include "tuza/hardness.hpp"
#include "tuza/lp.hpp"
#include "tuza/report.hpp"
#include "tuza/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tuza;
using nlohmann::json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t budget_nodes = Budget{}.node_cap;
  long budget_ms = Budget{}.time_cap.count();
  std::string format;
  std::string out;

  Budget budget() const { return {budget_nodes, std::chrono::milliseconds(budget_ms)}; }
  bool json() const { return format == "json"; }
};

struct TargetArgs {
  std::string family = "clique";
  int k = 3;

  TargetFamily get() const {
    if (family == "clique") return TargetFamily::clique(k);
    if (family == "cycle") return TargetFamily::odd_cycle(k);
    throw Error(ErrorKind::InvalidSpec, "target family must be clique or cycle, got '" + family + "'");
  }
};

std::string slurp(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidSpec, "cannot read " + path);
    text << in.rdbuf();
  }
  return text.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw Error(ErrorKind::OutputUnwritable, "cannot open " + g.out);
  out << text;
  if (!out) throw Error(ErrorKind::OutputUnwritable, "write failed for " + g.out);
}

void emit(const Globals& g, const json& j, const std::string& text) { emit(g, g.json() ? j.dump(2) + "\n" : text); }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::OutputUnwritable, "cannot open " + path);
  out << j.dump(2) << '\n';
}

std::string show(const Rational& q) {
  std::ostringstream s;
  s << to_string(q) << " (" << to_double(q) << ")";
  return s.str();
}

std::string show(const std::optional<Rational>& q) { return q ? show(*q) : "n/a"; }

HardnessOptions hardness_options(const Globals& g) {
  HardnessOptions opts;
  opts.budget = g.budget();
  opts.seed = g.seed;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering and packing triangles, cliques and odd cycles"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for randomized steps");
  app.add_option("--budget-nodes", globals.budget_nodes, "Node cap for exact searches");
  app.add_option("--budget-ms", globals.budget_ms, "Time cap (ms) for exact searches");
  app.add_option("--format", globals.format, "text | json (sweep: csv | json | plotdata)");
  app.add_option("--out", globals.out, "Output file (default stdout)");

  std::string graph_path;
  TargetArgs target;
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Edge-list file, - for stdin")->required(); };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--family", target.family, "clique | cycle");
    sub->add_option("--k", target.k, "Target size");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  std::string gen_family = "complete";
  std::size_t gen_n = 0, gen_t = 1;
  double gen_p = 0.5;
  std::vector<std::size_t> gen_parts;
  std::string gen_base;
  gen->add_option("--family", gen_family, "complete | multipartite | gnp | bipartite_gnp | cycle | petersen | blowup");
  gen->add_option("--n", gen_n, "Vertices (bipartite_gnp: split evenly)");
  gen->add_option("--p", gen_p, "Edge probability");
  gen->add_option("--parts", gen_parts, "Part sizes, e.g. 3,3,2")->delimiter(',');
  gen->add_option("--t", gen_t, "Blow-up factor");
  gen->add_option("--base", gen_base, "Blow-up base graph file");

  // lp
  auto* lp = app.add_subcommand("lp", "Fractional cover and packing");
  add_graph(lp);
  add_target(lp);
  std::string theta_text;
  lp->add_option("--theta", theta_text, "Support threshold (default 1, or 1/(k-2) for cycles)");

  // exact
  auto* exact = app.add_subcommand("exact", "Exact cover and packing by branch-and-bound");
  add_graph(exact);
  add_target(exact);
  std::string exact_what = "both";
  exact->add_option("--what", exact_what, "cover | packing | both");

  // cover
  auto* cover = app.add_subcommand("cover", "Cover by the deletion process, partition, or exact search");
  add_graph(cover);
  add_target(cover);
  bool cover_approx = false, cover_exact = false, cover_kpartition = false;
  std::string trace_path;
  auto* approx_flag = cover->add_flag("--approx", cover_approx, "LP deletion process (default)");
  cover->add_flag("--exact", cover_exact, "Exact branch-and-bound")->excludes(approx_flag);
  cover->add_flag("--kpartition", cover_kpartition, "(k-1)-partition cut")->excludes(approx_flag);
  cover->add_option("--trace", trace_path, "Write the process trace as JSON");

  // pack
  auto* pack = app.add_subcommand("pack", "Edge-disjoint packing");
  add_graph(pack);
  add_target(pack);
  bool pack_greedy = false, pack_exact = false;
  auto* greedy_flag = pack->add_flag("--greedy", pack_greedy, "Seeded greedy packing (default)");
  pack->add_flag("--exact", pack_exact, "Exact branch-and-bound")->excludes(greedy_flag);

  // bipartize
  auto* bip = app.add_subcommand("bipartize", "Local max-cut bipartization");
  add_graph(bip);

  // hardness
  auto* hard = app.add_subcommand("hardness", "tau bounds, delta interval and proof case");
  add_graph(hard);
  add_target(hard);
  std::string delta_text;
  hard->add_option("--delta", delta_text, "delta used for the case label (default beta^2/3200)");

  // witness
  auto* wit = app.add_subcommand("witness", "Dense induced bipartite witness in the zero-weight subgraph");
  add_graph(wit);
  std::string beta_text;
  std::size_t retries = 32;
  bool with_cut = false;
  wit->add_option("--beta", beta_text, "Treat the input as H itself, with this beta");
  wit->add_option("--retries", retries, "Sampling attempts");
  wit->add_flag("--case3", with_cut, "Also build the random cut (A+X, B+Y)");

  // verify-main
  auto* vm = app.add_subcommand("verify-main", "Check the packing and fractional cover lower bounds");
  add_graph(vm);
  bool no_lp = false, no_exact_packing = false;
  vm->add_flag("--no-lp", no_lp, "Skip the LP (tau* check)");
  vm->add_flag("--no-exact-packing", no_exact_packing, "Skip the packing search");

  // rho
  auto* rho = app.add_subcommand("rho", "Largest triangle-free subgraph bounds and gap");
  add_graph(rho);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a JSON-configured experiment grid");
  std::string config_path;
  std::size_t jobs = 0;
  sweep->add_option("config", config_path, "Sweep config (JSON)")->required();
  sweep->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto& g_opts = globals;
    if (!globals.format.empty() && globals.format != "text" && globals.format != "json" && !*sweep) {
      throw Error(ErrorKind::InvalidSpec, "--format must be text or json");
    }

    if (*gen) {
      GeneratorSpec spec;
      if (gen_family == "complete") spec = CompleteSpec{gen_n};
      else if (gen_family == "cycle") spec = CycleSpec{gen_n};
      else if (gen_family == "multipartite") spec = MultipartiteSpec{gen_parts};
      else if (gen_family == "gnp") spec = GnpSpec{gen_n, gen_p, globals.seed};
      else if (gen_family == "bipartite_gnp") spec = BipartiteGnpSpec{gen_n / 2, gen_n - gen_n / 2, gen_p, globals.seed};
      else if (gen_family == "petersen") spec = BlowupSpec{petersen_graph(), 1};
      else if (gen_family == "blowup") {
        if (gen_base.empty()) throw Error(ErrorKind::InvalidSpec, "blowup needs --base");
        spec = BlowupSpec{load_graph(gen_base), gen_t};
      } else {
        throw Error(ErrorKind::InvalidSpec, "unknown generator family '" + gen_family + "'");
      }
      Graph g = generate(spec);
      emit(g_opts, to_json(g), g.to_edge_list());
      return 0;
    }

    if (*sweep) {
      json config;
      try {
        config = json::parse(slurp(config_path));
      } catch (const json::exception& e) {
        throw Error(ErrorKind::ConfigInvalid, std::string("config is not JSON: ") + e.what());
      }
      SweepConfig cfg = SweepConfig::from_json(config);
      if (app.count("--seed") > 0) cfg.seeds = {globals.seed};
      if (app.count("--budget-nodes") > 0) cfg.budget.node_cap = globals.budget_nodes;
      if (app.count("--budget-ms") > 0) cfg.budget.time_cap = std::chrono::milliseconds(globals.budget_ms);
      if (jobs > 0) cfg.jobs = jobs;
      auto records = run_sweep(cfg);
      ReportFormat fmt = parse_report_format(globals.format.empty() ? "csv" : globals.format);
      if (globals.out.empty() || globals.out == "-") {
        switch (fmt) {
          case ReportFormat::Csv: std::cout << to_csv(records); break;
          case ReportFormat::Json: std::cout << to_json(records).dump(2) << '\n'; break;
          case ReportFormat::PlotData: std::cout << to_plotdata(records); break;
        }
      } else {
        emit_report(records, fmt, globals.out);
      }
      for (const auto& r : records) verify_record(r);
      return 0;
    }

    Graph g = load_graph(graph_path);
    const Budget budget = globals.budget();

    if (*lp) {
      TargetFamily fam = target.get();
      TargetList targets = enumerate_targets(g, fam);
      FractionalCover c = fractional_cover(g, targets);
      Rational theta = theta_text.empty()
                           ? (fam.kind() == TargetKind::OddCycle ? Rational(1, fam.k() - 2) : Rational(1))
                           : parse_rational(theta_text);
      theta.canonicalize();
      EdgeClassification classes = support_classes(c, theta);
      std::ostringstream text;
      text << "family  " << fam.name() << "\nn m     " << g.n() << ' ' << g.m() << "\ntargets " << targets.size()
           << "\ntau*    " << show(c.value) << "\nnu*     " << show(c.dual_packing.value) << "\nF0      "
           << classes.zero.size() << "\nF_theta " << classes.heavy.size() << " (theta " << to_string(theta) << ")\n";
      emit(g_opts, to_json(g, c, targets, classes), text.str());
      return 0;
    }

    if (*exact) {
      TargetFamily fam = target.get();
      TargetList targets = enumerate_targets(g, fam);
      if (exact_what != "cover" && exact_what != "packing" && exact_what != "both") {
        throw Error(ErrorKind::InvalidSpec, "--what must be cover, packing or both");
      }
      json j = {{"family", fam.name()}, {"n", g.n()}, {"m", g.m()}, {"targets", targets.size()}};
      std::ostringstream text;
      bool complete = true;
      if (exact_what != "packing") {
        CoverSolution c = exact_cover(g, targets, budget);
        ensure(verify_cover(g, fam, c.edges), "exact cover failed re-verification");
        complete = complete && c.optimal;
        j["cover"] = to_json(g, c);
        text << "tau " << c.size() << (c.optimal ? " (optimal)" : " (upper bound, budget exhausted)") << '\n';
        for (EdgeId e : c.edges) text << "  " << g.edge(e).u << ' ' << g.edge(e).v << '\n';
      }
      if (exact_what != "cover") {
        PackingSolution p = exact_packing(g, targets, budget);
        ensure(verify_packing(g, targets, p.targets), "exact packing failed re-verification");
        complete = complete && p.optimal;
        j["packing"] = to_json(targets, p);
        text << "nu " << p.size() << (p.optimal ? " (optimal)" : " (lower bound, budget exhausted)") << '\n';
        for (auto t : p.targets) {
          text << " ";
          for (Vertex v : targets.targets[t].vertices) text << ' ' << v;
          text << '\n';
        }
      }
      emit(g_opts, j, text.str());
      return complete ? 0 : exit_code(ErrorKind::BudgetExceeded);
    }

    if (*cover) {
      TargetFamily fam = target.get();
      json j;
      std::size_t size = 0;
      std::string method;
      if (cover_exact) {
        TargetList targets = enumerate_targets(g, fam);
        CoverSolution c = exact_cover(g, targets, budget);
        ensure(verify_cover(g, fam, c.edges), "cover failed re-verification");
        j = to_json(g, c);
        size = c.size();
        method = c.optimal ? "exact" : "exact (budget exhausted)";
        if (!c.optimal) {
          emit(g_opts, j, "cover " + std::to_string(size) + " via " + method + "\n");
          return exit_code(ErrorKind::BudgetExceeded);
        }
      } else if (cover_kpartition || fam.kind() == TargetKind::OddCycle) {
        CutResult cut = fam.kind() == TargetKind::OddCycle ? bipartize(g, globals.seed)
                                                           : kpartition_cover(g, fam.k(), globals.seed);
        ensure(verify_cover(g, fam, cut.removed), "partition cover failed re-verification");
        j = to_json(g, cut);
        size = cut.removed_count();
        method = std::to_string(cut.parts) + "-partition";
      } else {
        ProcessResult r = kk_cover_process(g, fam.k(), globals.seed);
        ensure(verify_cover(g, fam, r.cover.edges), "process cover failed re-verification");
        j = to_json(g, r.cover);
        j["trace"] = to_json(g, r.trace);
        if (!trace_path.empty()) write_json_file(trace_path, to_json(g, r.trace));
        size = r.cover.size();
        method = "deletion process, ratio bound " + show(r.trace.ratio_bound);
      }
      j["method"] = method;
      std::ostringstream text;
      text << "cover " << size << " via " << method << '\n';
      emit(g_opts, j, text.str());
      return 0;
    }

    if (*pack) {
      TargetFamily fam = target.get();
      TargetList targets = enumerate_targets(g, fam);
      PackingSolution p = pack_exact ? exact_packing(g, targets, budget) : greedy_packing(targets, globals.seed);
      ensure(verify_packing(g, targets, p.targets), "packing failed re-verification");
      std::ostringstream text;
      text << "nu " << (pack_exact && p.optimal ? "= " : ">= ") << p.size() << '\n';
      emit(g_opts, to_json(targets, p), text.str());
      return pack_exact && !p.optimal ? exit_code(ErrorKind::BudgetExceeded) : 0;
    }

    if (*bip) {
      CutResult cut = bipartize(g, globals.seed);
      ensure(!has_target(g.without_edges(cut.removed), TargetFamily::triangles()), "residue has a triangle");
      std::ostringstream text;
      text << "removed " << cut.removed_count() << " of " << g.m() << " (bound " << g.m() / 2 << ")\n";
      emit(g_opts, to_json(g, cut), text.str());
      return 0;
    }

    if (*hard) {
      TargetFamily fam = target.get();
      HardnessReport r = hardness_interval(g, fam, hardness_options(globals));
      json j = to_json(r);
      std::ostringstream text;
      text << "family " << fam.name() << "  n " << r.n << "  m " << r.m << "  beta " << show(r.beta) << '\n'
           << "tau* " << show(r.tau_star) << "  tau in [" << to_string(r.tau_lower) << ", " << r.tau_upper << "] ("
           << r.tau_upper_source << ")\n"
           << "delta in [" << show(r.delta_lo) << ", " << show(r.delta_hi) << "]\n";
      if (r.cover && r.m > 0 && fam.is_triangle()) {
        Rational delta = delta_text.empty() ? delta_of_beta(r.beta) : parse_rational(delta_text);
        CaseLabel label = classify_case(*r.cover, r.beta, delta);
        j["case"] = to_json(label);
        text << to_string(label.label) << ": " << label.reason << '\n';
      }
      emit(g_opts, j, text.str());
      return 0;
    }

    if (*wit) {
      json j;
      std::ostringstream text;
      if (!beta_text.empty()) {
        Rational beta = parse_rational(beta_text);
        BipartiteWitness w = find_bipartite_witness(g, TargetFamily::triangles(), beta, globals.seed, retries);
        ensure(verify_witness(g, w, true), "witness failed re-verification");
        j = to_json(g, w);
        text << "|F*| " << w.size() << "  threshold " << show(w.threshold) << (w.threshold_met ? "  met" : "  not met")
             << "  attempts " << w.attempts << '\n';
      } else {
        TargetList triangles = enumerate_targets(g, TargetFamily::triangles());
        FractionalCover c = fractional_cover(g, triangles);
        Graph h = zero_weight_subgraph(g, c.weights);
        Rational beta = density(g);
        BipartiteWitness w = find_bipartite_witness(h, TargetFamily::triangles(), beta, globals.seed, retries);
        ensure(verify_witness(h, w, true), "witness failed re-verification");
        ensure(light_paths_absent(g, c.weights, w, 3), "edge inside a witness class has weight below 1");
        j = to_json(h, w);
        j["tau_star"] = rational_json(c.value);
        text << "tau* " << show(c.value) << "  |F0| " << h.m() << '\n'
             << "|F*| " << w.size() << "  threshold " << show(w.threshold) << (w.threshold_met ? "  met" : "  not met")
             << "  attempts " << w.attempts << '\n';
        if (with_cut) {
          Case3Cut cut = case3_cut(g, w, globals.seed, retries);
          j["case3_cut"] = to_json(cut);
          text << "cut " << cut.crossing << " crossing, target " << show(cut.target)
               << (cut.target_met ? "  met" : "  not met") << '\n';
        }
      }
      emit(g_opts, j, text.str());
      return 0;
    }

    if (*vm) {
      MainBoundOptions opts;
      opts.hardness = hardness_options(globals);
      opts.hardness.solve_lp = !no_lp;
      opts.run_exact_packing = !no_exact_packing;
      opts.packing_budget = budget;
      MainBoundCheck c = verify_main_bound(g, opts);
      std::ostringstream text;
      text << "n " << c.n << "  m " << c.m << "  beta " << show(c.beta) << "\nrhs (1+beta^2/800)m/4 = " << show(c.rhs)
           << "\nnu >= " << c.nu_lower << " (" << c.nu_source << ")  " << (c.nu_passes ? "pass" : "fail")
           << "\ntau* = " << show(c.tau_star) << "  "
           << (c.tau_star_passes ? (*c.tau_star_passes ? "pass" : "fail") : "skipped")
           << "\nhypothesis (delta <= " << to_string(c.delta_beta) << "): " << to_string(c.hypothesis) << '\n';
      emit(g_opts, to_json(c), text.str());
      return 0;
    }

    if (*rho) {
      RhoReport r = rho_report(g, hardness_options(globals));
      std::ostringstream text;
      text << "rho in [" << r.rho_lo << ", " << r.rho_hi << "]  rho* " << show(r.rho_star) << "\ngap in ["
           << show(r.gap_lo) << ", " << show(r.gap_hi) << "]  bound " << show(r.gap_bound) << " (" << r.gap_branch
           << ")\n";
      emit(g_opts, to_json(r), text.str());
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "tuza: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "tuza: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
