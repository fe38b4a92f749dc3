#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdpt/config.hpp"
#include "tdpt/convergence.hpp"
#include "tdpt/norm_analysis.hpp"
#include "tdpt/propagator.hpp"
#include "tdpt/pulse.hpp"

namespace tdpt {

enum class ScenarioKind { Single, DtKSweep, GradientSweep, ChirpSweep };

std::string_view to_string(ScenarioKind kind) noexcept;
ScenarioKind parse_scenario_kind(const std::string& text);

struct PacketSpec {
  double center = 0.0;
  double width = 1.0;
  double momentum = 0.0;
};

/// Fully resolved scenario description. All times are atomic units.
struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::Single;

  double r_min = -60.0;
  double r_max = 60.0;
  std::size_t n_points = 1024;
  double mass = 1.0;
  LinearPotentialPair potentials{};
  PacketSpec packet{};

  double e0_prime = 0.0;
  double beta_prime = 1.0;  ///< stored canonically so resolved configs round-trip exactly
  double t_d = 0.0;
  double omega0 = 0.0;
  double b2 = 0.0;
  bool chirped = false;  ///< chirp_sweep always uses the chirped variant

  double mu = 1.0;
  double dt = 1.0;
  std::size_t k = 1;
  std::size_t n_steps = 1;
  std::size_t report_stride = 10;

  std::vector<double> sweep_dt;
  std::vector<std::size_t> sweep_k;
  std::vector<double> sweep_m0;
  std::vector<double> sweep_b2;

  SpatialGrid grid() const;
  LaserPulse pulse() const;
  SystemHamiltonian hamiltonian() const;
  TwoComponentWaveFunction initial_state() const;
  double t_final() const noexcept { return dt * static_cast<double>(n_steps); }

  /// Throws ConfigError for missing, unknown or invalid keys.
  static ScenarioConfig from_key_values(const KeyValueConfig& kv);
  static ScenarioConfig load(const std::filesystem::path& path,
                             const std::vector<std::string>& overrides = {});
  /// Resolved key-value form; from_key_values(to_key_values()) reproduces *this.
  KeyValueConfig to_key_values() const;
};

struct ParameterPoint {
  std::string label;
  ScenarioConfig config;  ///< single-run configuration (sweep lists cleared)
};

/// Expands sweep lists into one point per parameter combination. The total time is
/// kept fixed when dt is swept; the report stride is scaled so that every run
/// reports at the times of the coarsest step.
std::vector<ParameterPoint> expand_points(const ScenarioConfig& cfg);

struct RunResult {
  ParameterPoint point;
  std::vector<NormOrderReport> reports;
  std::vector<std::string> warnings;
};

inline constexpr double kBoundaryBandFraction = 0.1;
inline constexpr double kBoundaryWarnThreshold = 1e-6;
inline constexpr double kEdgeCellErrorThreshold = 1e-6;

/// Runs one parameter point. Reports at step 0 and every report_stride steps, and at
/// the final step. Throws BoundaryError when density reaches the edge cells.
RunResult run_point(const ParameterPoint& point);

/// Runs all points on up to `jobs` worker threads; results are in point order.
std::vector<RunResult> run_scenario(const ScenarioConfig& cfg, std::size_t jobs = 1);

std::string format_report_csv(const std::vector<NormOrderReport>& reports, std::size_t k);

struct WrittenOutputs {
  std::vector<std::filesystem::path> csv_files;
  std::filesystem::path manifest;
};

/// Writes one CSV per run and a manifest holding the resolved config plus file list.
WrittenOutputs write_outputs(const std::filesystem::path& out_dir, const ScenarioConfig& cfg,
                             const std::vector<RunResult>& results);

/// True iff the stationary entries of runs differing only in the potential gradient agree
/// within 1e-11 at every report.
bool stationary_vs_hamiltonian_check(const ScenarioConfig& cfg, const std::vector<double>& gradients,
                                     std::size_t jobs = 1);

NormSeries norm_series(const RunResult& result);

/// Named analysis tables for the sweep subcommand: always "summary.csv"; dt pairs
/// (dt, dt/2) at equal k add "convergence_k<k>.csv"; sweeps add "checks.csv".
std::map<std::string, std::string> analyze_results(const ScenarioConfig& cfg,
                                                   const std::vector<RunResult>& results);

/// Prediction table aligned to the report times of a single configuration.
std::string prediction_csv(const ScenarioConfig& cfg);

}  // namespace tdpt
