#pragma once

#include "tuza/exact.hpp"
#include "tuza/graph.hpp"
#include "tuza/lp.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tuza {

/// One generator family with parameter lists; the sweep runs the cartesian
/// product of the lists, times the seed list.
struct GeneratorGrid {
  std::string type;  // complete | multipartite | gnp | bipartite_gnp | cycle | petersen | blowup
  std::vector<std::size_t> n;
  std::vector<double> p;
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> t;
  std::optional<GeneratorSpec> base;  // blowup base graph generator
};

struct Solvers {
  bool exact = true;
  bool lp = true;
  bool approx = true;
  bool hardness = false;  // case label, witness and rho columns (triangles only)
};

struct SweepConfig {
  std::vector<GeneratorGrid> grids;
  std::vector<std::uint64_t> seeds{1};
  TargetFamily family = TargetFamily::triangles();
  Solvers solvers;
  Budget budget{5'000'000, std::chrono::milliseconds(60'000)};
  LpOptions lp;
  std::size_t jobs = 1;

  static SweepConfig from_json(const nlohmann::json& j);  // ConfigInvalid on bad input
};

/// One sweep row. Optional fields are blank when the solver did not run.
/// Rationals are stored as exact "p/q" strings.
struct InstanceRecord {
  std::size_t id = 0;
  std::string generator;
  std::uint64_t seed = 0;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string beta;
  std::size_t targets = 0;
  std::optional<std::string> tau_star;
  std::optional<std::string> nu_star;
  std::optional<std::size_t> tau_lower;
  std::optional<std::size_t> tau_upper;
  bool tau_optimal = false;
  std::optional<std::size_t> nu_lower;
  std::optional<std::size_t> nu_upper;
  bool nu_optimal = false;
  std::optional<std::string> delta_lo;
  std::optional<std::string> delta_hi;
  std::optional<std::size_t> approx_cover;
  std::optional<std::string> ratio_bound;  // ⌊k²/4⌋·τ*
  std::optional<std::string> case_label;
  std::optional<std::size_t> witness_size;
  std::optional<bool> witness_threshold_met;
  std::optional<std::size_t> rho_lo;
  std::optional<std::size_t> rho_hi;
  std::optional<std::string> rho_star;
  std::string error;
  double wall_ms = 0;

  bool operator==(const InstanceRecord&) const = default;
};

/// Builds, solves and records every (grid point × seed). Per-instance failures
/// land in the `error` column; the sweep itself only throws ConfigInvalid.
std::vector<InstanceRecord> run_sweep(const SweepConfig& config);

/// Single instance, as used by the sweep.
InstanceRecord run_instance(std::size_t id, const GeneratorSpec& spec, std::uint64_t seed, const SweepConfig& config);

enum class ReportFormat { Csv, Json, PlotData };
ReportFormat parse_report_format(const std::string& name);

inline constexpr const char* kCsvSchema = "# tuza-sweep schema v1";

std::string to_csv(const std::vector<InstanceRecord>& records);
nlohmann::json to_json(const std::vector<InstanceRecord>& records);
/// Whitespace-separated columns: beta, nu/m, (1 + beta^2/800)/4.
std::string to_plotdata(const std::vector<InstanceRecord>& records);

/// Writes to `path`; throws OutputUnwritable.
void emit_report(const std::vector<InstanceRecord>& records, ReportFormat format, const std::filesystem::path& path);

/// Parses and re-verifies every row (ν ≤ τ ≤ 3ν, τ ≤ factor·ν*, τ* = ν*,
/// approx ≤ ⌊k²/4⌋·τ*, ρ identities). Throws InvariantViolation on a bad row,
/// ConfigInvalid on a malformed file.
std::vector<InstanceRecord> load_csv(const std::string& text);
std::vector<InstanceRecord> records_from_json(const nlohmann::json& j);
void verify_record(const InstanceRecord& record);

/// Integrality factor asserted by the self-check: ⌊k²/4⌋ for K_k (2 for
/// triangles), k-1 for C_k.
long integrality_factor(const TargetFamily& family);

}  // namespace tuza
