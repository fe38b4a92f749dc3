#include "tdpt/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "tdpt/analytics.hpp"
#include "tdpt/diagnostics.hpp"
#include "tdpt/errors.hpp"

namespace tdpt {

namespace {

const std::set<std::string> kKnownKeys = {
    "scenario",         "grid.r_min",      "grid.r_max",     "grid.n_points",  "mass",
    "potential.m0",     "potential.c0",    "potential.c1",   "packet.center",  "packet.width",
    "packet.momentum",  "pulse.e0",        "pulse.tau_prime", "pulse.beta_prime", "pulse.t_d",
    "pulse.omega0",     "pulse.b2",        "pulse.variant",  "mu",             "dt",
    "k",                "t_final",         "n_steps",        "report_stride",  "sweep.dt",
    "sweep.k",          "sweep.m0",        "sweep.b2",
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Rewrites every "<key>_fs" entry as "<key>" in atomic units.
KeyValueConfig convert_femtoseconds(const KeyValueConfig& in) {
  KeyValueConfig out;
  for (const auto& [key, value] : in.entries()) {
    if (key.rfind("manifest.", 0) == 0) continue;
    if (!ends_with(key, "_fs")) {
      out.set(key, value);
      continue;
    }
    const std::string base = key.substr(0, key.size() - 3);
    if (in.contains(base)) throw ConfigError("both '" + key + "' and '" + base + "' given");
    std::string converted;
    for (double v : in.get_double_list(key)) {
      if (!converted.empty()) converted += ", ";
      converted += format_double(v * kAtomicTimePerFemtosecond);
    }
    if (converted.empty()) throw ConfigError("empty value for '" + key + "'");
    out.set(base, converted);
  }
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ", ") + format_double(x);
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

// Ratio a/b if it is an integer within rounding, otherwise 0.
std::size_t integer_ratio(double a, double b) {
  const double r = a / b;
  const double n = std::round(r);
  return (n >= 1.0 && std::abs(r - n) < 1e-9 * n) ? static_cast<std::size_t>(n) : 0;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::Single: return "single";
    case ScenarioKind::DtKSweep: return "dt_k_sweep";
    case ScenarioKind::GradientSweep: return "gradient_sweep";
    case ScenarioKind::ChirpSweep: return "chirp_sweep";
  }
  return "single";
}

ScenarioKind parse_scenario_kind(const std::string& text) {
  for (auto kind : {ScenarioKind::Single, ScenarioKind::DtKSweep, ScenarioKind::GradientSweep,
                    ScenarioKind::ChirpSweep}) {
    if (text == to_string(kind)) return kind;
  }
  throw ConfigError("unknown scenario '" + text + "'");
}

SpatialGrid ScenarioConfig::grid() const { return SpatialGrid(r_min, r_max, n_points); }

LaserPulse ScenarioConfig::pulse() const {
  return chirped ? LaserPulse::chirped(e0_prime, beta_prime, t_d, omega0, b2)
                 : LaserPulse::unchirped(e0_prime, beta_prime, t_d, omega0);
}

SystemHamiltonian ScenarioConfig::hamiltonian() const {
  return SystemHamiltonian::linear(grid(), mass, potentials);
}

TwoComponentWaveFunction ScenarioConfig::initial_state() const {
  return gaussian_packet(grid(), packet.center, packet.width, packet.momentum,
                         ElectronicState::Excited);
}

ScenarioConfig ScenarioConfig::from_key_values(const KeyValueConfig& raw) {
  const KeyValueConfig kv = convert_femtoseconds(raw);
  for (const auto& [key, value] : kv.entries()) {
    if (!kKnownKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }

  ScenarioConfig c;
  c.scenario = parse_scenario_kind(kv.get("scenario").value_or("single"));
  c.r_min = kv.get_double("grid.r_min");
  c.r_max = kv.get_double("grid.r_max");
  c.n_points = kv.get_size("grid.n_points");
  c.mass = kv.get_double("mass", 1.0);
  c.potentials.m0 = kv.get_double("potential.m0", 0.0);
  c.potentials.c0 = kv.get_double("potential.c0", 0.0);
  c.potentials.c1 = kv.get_double("potential.c1", 0.0);
  c.packet.center = kv.get_double("packet.center", 0.5 * (c.r_min + c.r_max));
  c.packet.width = kv.get_double("packet.width", 1.0);
  c.packet.momentum = kv.get_double("packet.momentum", 0.0);

  c.e0_prime = kv.get_double("pulse.e0");
  const bool has_tau = kv.contains("pulse.tau_prime");
  const bool has_beta = kv.contains("pulse.beta_prime");
  if (has_tau == has_beta) throw ConfigError("give exactly one of pulse.tau_prime / pulse.beta_prime");
  c.beta_prime = has_beta ? kv.get_double("pulse.beta_prime")
                          : LaserPulse::beta_from_fwhm(kv.get_double("pulse.tau_prime"));
  if (!(c.beta_prime > 0.0)) throw ConfigError("pulse.beta_prime must be positive");
  c.t_d = kv.get_double("pulse.t_d");
  c.omega0 = kv.get_double("pulse.omega0");
  c.b2 = kv.get_double("pulse.b2", 0.0);
  const std::string variant = kv.get("pulse.variant").value_or(c.b2 != 0.0 ? "chirped" : "unchirped");
  if (variant != "chirped" && variant != "unchirped") {
    throw ConfigError("pulse.variant must be 'chirped' or 'unchirped'");
  }
  c.chirped = variant == "chirped" || c.scenario == ScenarioKind::ChirpSweep;
  if (!c.chirped && c.b2 != 0.0) throw ConfigError("pulse.b2 needs pulse.variant = chirped");

  c.mu = kv.get_double("mu", 1.0);
  const auto listed_k = kv.get_size_list("sweep.k");
  c.k = listed_k.empty() || kv.contains("k") ? kv.get_size("k") : listed_k.front();
  if (c.k < 1 || c.k > kMaxPerturbationOrder) throw ConfigError("k must be in 1..32");
  c.report_stride = kv.get_size("report_stride", 10);
  if (c.report_stride < 1) throw ConfigError("report_stride must be >= 1");

  c.sweep_dt = kv.get_double_list("sweep.dt");
  c.sweep_k = kv.get_size_list("sweep.k");
  c.sweep_m0 = kv.get_double_list("sweep.m0");
  c.sweep_b2 = kv.get_double_list("sweep.b2");
  for (double v : c.sweep_dt) {
    if (!(v > 0.0)) throw ConfigError("sweep.dt values must be positive");
  }
  for (auto v : c.sweep_k) {
    if (v < 1 || v > kMaxPerturbationOrder) throw ConfigError("sweep.k values must be in 1..32");
  }

  if (kv.contains("dt")) {
    c.dt = kv.get_double("dt");
  } else if (!c.sweep_dt.empty()) {
    c.dt = *std::max_element(c.sweep_dt.begin(), c.sweep_dt.end());
  } else {
    throw ConfigError("missing required key 'dt' (or dt_fs)");
  }
  if (!(c.dt > 0.0)) throw ConfigError("dt must be positive");

  const bool has_steps = kv.contains("n_steps");
  const bool has_final = kv.contains("t_final");
  if (has_steps == has_final) throw ConfigError("give exactly one of n_steps / t_final");
  if (has_steps) {
    c.n_steps = kv.get_size("n_steps");
  } else {
    const double t_final = kv.get_double("t_final");
    if (!(t_final > 0.0)) throw ConfigError("t_final must be positive");
    c.n_steps = static_cast<std::size_t>(std::ceil(t_final / c.dt - 1e-9));
  }
  if (c.n_steps < 1) throw ConfigError("run needs at least one step");
  if (c.t_final() < c.t_d) throw ConfigError("run ends before the pulse maximum t_d");

  switch (c.scenario) {
    case ScenarioKind::Single: break;
    case ScenarioKind::DtKSweep:
      if (c.sweep_dt.empty() && c.sweep_k.empty()) throw ConfigError("dt_k_sweep needs sweep.dt or sweep.k");
      break;
    case ScenarioKind::GradientSweep:
      if (c.sweep_m0.size() < 2) throw ConfigError("gradient_sweep needs at least two sweep.m0 values");
      break;
    case ScenarioKind::ChirpSweep:
      if (c.sweep_b2.empty()) throw ConfigError("chirp_sweep needs sweep.b2");
      break;
  }

  // Validates grid and packet eagerly so configuration errors surface before running.
  (void)c.initial_state();
  (void)c.pulse();
  if (!(c.mass > 0.0)) throw ConfigError("mass must be positive");
  return c;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& path,
                                    const std::vector<std::string>& overrides) {
  KeyValueConfig kv = KeyValueConfig::load(path);
  for (const auto& o : overrides) kv.apply_override(o);
  return from_key_values(kv);
}

KeyValueConfig ScenarioConfig::to_key_values() const {
  KeyValueConfig kv;
  kv.set("scenario", std::string(to_string(scenario)));
  kv.set("grid.r_min", format_double(r_min));
  kv.set("grid.r_max", format_double(r_max));
  kv.set("grid.n_points", std::to_string(n_points));
  kv.set("mass", format_double(mass));
  kv.set("potential.m0", format_double(potentials.m0));
  kv.set("potential.c0", format_double(potentials.c0));
  kv.set("potential.c1", format_double(potentials.c1));
  kv.set("packet.center", format_double(packet.center));
  kv.set("packet.width", format_double(packet.width));
  kv.set("packet.momentum", format_double(packet.momentum));
  kv.set("pulse.e0", format_double(e0_prime));
  kv.set("pulse.beta_prime", format_double(beta_prime));
  kv.set("pulse.t_d", format_double(t_d));
  kv.set("pulse.omega0", format_double(omega0));
  kv.set("pulse.b2", format_double(b2));
  kv.set("pulse.variant", chirped ? "chirped" : "unchirped");
  kv.set("mu", format_double(mu));
  kv.set("dt", format_double(dt));
  kv.set("k", std::to_string(k));
  kv.set("n_steps", std::to_string(n_steps));
  kv.set("report_stride", std::to_string(report_stride));
  if (!sweep_dt.empty()) kv.set("sweep.dt", join(sweep_dt));
  if (!sweep_k.empty()) kv.set("sweep.k", join(sweep_k));
  if (!sweep_m0.empty()) kv.set("sweep.m0", join(sweep_m0));
  if (!sweep_b2.empty()) kv.set("sweep.b2", join(sweep_b2));
  return kv;
}

std::vector<ParameterPoint> expand_points(const ScenarioConfig& cfg) {
  const std::vector<double> dts = cfg.sweep_dt.empty() ? std::vector<double>{cfg.dt} : cfg.sweep_dt;
  const std::vector<std::size_t> ks = cfg.sweep_k.empty() ? std::vector<std::size_t>{cfg.k} : cfg.sweep_k;
  const std::vector<double> m0s =
      cfg.sweep_m0.empty() ? std::vector<double>{cfg.potentials.m0} : cfg.sweep_m0;
  const std::vector<double> b2s = cfg.sweep_b2.empty() ? std::vector<double>{cfg.b2} : cfg.sweep_b2;

  std::vector<ParameterPoint> points;
  for (double dt : dts) {
    for (auto k : ks) {
      for (double m0 : m0s) {
        for (double b2 : b2s) {
          ParameterPoint p;
          p.config = cfg;
          p.config.scenario = ScenarioKind::Single;
          p.config.sweep_dt.clear();
          p.config.sweep_k.clear();
          p.config.sweep_m0.clear();
          p.config.sweep_b2.clear();
          p.config.dt = dt;
          if (const auto r = integer_ratio(cfg.dt, dt)) {
            p.config.n_steps = cfg.n_steps * r;
            p.config.report_stride = cfg.report_stride * r;
          } else {
            p.config.n_steps = static_cast<std::size_t>(std::ceil(cfg.t_final() / dt - 1e-9));
          }
          p.config.k = k;
          p.config.potentials.m0 = m0;
          p.config.b2 = b2;
          std::string label = "p" + std::to_string(points.size());
          if (!cfg.sweep_dt.empty()) label += "_dt" + short_number(dt);
          if (!cfg.sweep_k.empty()) label += "_k" + std::to_string(k);
          if (!cfg.sweep_m0.empty()) label += "_m0" + short_number(m0);
          if (!cfg.sweep_b2.empty()) label += "_b2" + short_number(b2);
          p.label = label;
          points.push_back(std::move(p));
        }
      }
    }
  }
  return points;
}

namespace {

struct EdgeFractions {
  double band = 0.0;
  double edge = 0.0;
};

EdgeFractions edge_fractions(const PerturbativeState& ps) {
  const std::size_t n = ps.grid().size();
  const auto band = std::max<std::size_t>(1, static_cast<std::size_t>(kBoundaryBandFraction * n));
  double total = 0.0, in_band = 0.0, in_edge = 0.0;
  for (const auto& psi : ps.orders()) {
    for (auto comp : {psi.psi1(), psi.psi0()}) {
      for (std::size_t i = 0; i < n; ++i) {
        const double d = std::norm(comp[i]);
        total += d;
        if (i < band || i >= n - band) in_band += d;
        if (i == 0 || i == n - 1) in_edge += d;
      }
    }
  }
  if (!(total > 0.0)) return {};
  return {in_band / total, in_edge / total};
}

}  // namespace

RunResult run_point(const ParameterPoint& point) {
  const ScenarioConfig& c = point.config;
  const SystemHamiltonian h = c.hamiltonian();
  const SimpleAlgorithm alg(h, CouplingOperator(c.mu, c.pulse()), c.dt);
  PerturbativeState ps(c.initial_state(), c.k, c.dt);

  RunResult result;
  result.point = point;
  bool warned = false;
  auto record = [&] {
    const auto f = edge_fractions(ps);
    if (f.edge > kEdgeCellErrorThreshold) {
      throw BoundaryError(point.label + ": wave packet reached the grid edge at t = " +
                          short_number(ps.time()) + " (edge fraction " + short_number(f.edge) + ")");
    }
    if (!warned && f.band > kBoundaryWarnThreshold) {
      warned = true;
      const std::string msg = point.label + ": density within 10% of the grid edge at t = " +
                              short_number(ps.time()) + " (fraction " + short_number(f.band) + ")";
      result.warnings.push_back(msg);
      warn(msg);
    }
    result.reports.push_back(norm_orders(ps));
  };

  record();
  for (std::size_t step = 1; step <= c.n_steps; ++step) {
    alg.advance(ps);
    if (step % c.report_stride == 0 || step == c.n_steps) record();
  }
  return result;
}

std::vector<RunResult> run_scenario(const ScenarioConfig& cfg, std::size_t jobs) {
  const auto points = expand_points(cfg);
  std::vector<std::optional<RunResult>> slots(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        slots[i] = run_point(points[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, points.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<RunResult> out;
  out.reserve(points.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::string format_report_csv(const std::vector<NormOrderReport>& reports, std::size_t k) {
  std::string out = "t,total_norm";
  for (std::size_t m = 1; m <= k; ++m) out += ",N_" + std::to_string(2 * m);
  for (std::size_t m = 1; m <= k; ++m) out += ",class_" + std::to_string(m);
  out += "\n";
  for (const auto& r : reports) {
    out += sci(r.time) + "," + sci(r.total_norm);
    for (const auto& e : r.entries) out += "," + sci(e.value);
    for (const auto& e : r.entries) out += "," + std::string(to_string(e.cls));
    out += "\n";
  }
  return out;
}

WrittenOutputs write_outputs(const std::filesystem::path& out_dir, const ScenarioConfig& cfg,
                             const std::vector<RunResult>& results) {
  std::filesystem::create_directories(out_dir);
  WrittenOutputs written;
  KeyValueConfig manifest = cfg.to_key_values();
  manifest.set("manifest.points", std::to_string(results.size()));
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const std::string name = r.point.label + ".csv";
    const auto path = out_dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write output file '" + path.string() + "'");
    f << format_report_csv(r.reports, r.point.config.k);
    written.csv_files.push_back(path);
    manifest.set("manifest.point." + std::to_string(i) + ".label", r.point.label);
    manifest.set("manifest.point." + std::to_string(i) + ".file", name);
  }
  written.manifest = out_dir / "manifest.cfg";
  std::ofstream f(written.manifest, std::ios::binary);
  if (!f) throw ConfigError("cannot write manifest '" + written.manifest.string() + "'");
  f << "# resolved configuration; reload with --config to reproduce these outputs\n"
    << manifest.to_string();
  return written;
}

bool stationary_vs_hamiltonian_check(const ScenarioConfig& cfg, const std::vector<double>& gradients,
                                     std::size_t jobs) {
  if (gradients.size() < 2) throw UsageError("need at least two gradients to compare");
  ScenarioConfig c = cfg;
  c.scenario = ScenarioKind::GradientSweep;
  c.sweep_dt.clear();
  c.sweep_k.clear();
  c.sweep_b2.clear();
  c.sweep_m0 = gradients;
  const auto results = run_scenario(c, jobs);
  std::vector<std::vector<NormOrderReport>> runs;
  for (const auto& r : results) runs.push_back(r.reports);
  return entries_agree(runs, OrderClass::Stationary, 1e-11);
}

NormSeries norm_series(const RunResult& result) {
  NormSeries s;
  s.dt = result.point.config.dt;
  for (const auto& r : result.reports) {
    s.times.push_back(r.time);
    s.deviations.push_back(r.total_norm - 1.0);
  }
  return s;
}

std::map<std::string, std::string> analyze_results(const ScenarioConfig& cfg,
                                                   const std::vector<RunResult>& results) {
  std::map<std::string, std::string> files;

  std::string summary =
      "point,dt,k,m0,b2,t_final,total_norm,stationary_sum,oscillatory_sum,onset,N_2,N_2_envelope_prediction,"
      "N_2_erf_prediction\n";
  for (const auto& r : results) {
    const auto& c = r.point.config;
    const auto& last = r.reports.back();
    const auto onset = divergence_onset(r.reports);
    const auto pulse = c.pulse();
    summary += r.point.label + "," + sci(c.dt) + "," + std::to_string(c.k) + "," + sci(c.potentials.m0) +
               "," + sci(c.b2) + "," + sci(last.time) + "," + sci(last.total_norm) + "," +
               sci(last.stationary_sum()) + "," + sci(last.oscillatory_sum()) + "," +
               (onset ? sci(*onset) : std::string("never")) + "," + sci(last.entries.front().value) +
               "," + sci(stationary_prediction(pulse, c.mu, c.dt, last.time)) + "," +
               sci(stationary_prediction_chirped(c.mu, c.dt, c.e0_prime, pulse.tau_prime(), c.b2,
                                                 c.t_d, last.time)) +
               "\n";
  }
  files["summary.csv"] = summary;

  std::string checks = "check,value\n";
  bool have_checks = false;

  if (cfg.scenario == ScenarioKind::DtKSweep) {
    for (const auto& coarse : results) {
      for (const auto& fine : results) {
        const auto& a = coarse.point.config;
        const auto& b = fine.point.config;
        if (a.k != b.k || std::abs(a.dt - 2.0 * b.dt) > 1e-12 * a.dt) continue;
        const auto rep = convergence_split(norm_series(coarse), norm_series(fine));
        std::string csv = "t,e_coarse,phi,chi,phi_share\n";
        const auto sa = norm_series(coarse);
        for (std::size_t i = 0; i < rep.times.size(); ++i) {
          csv += sci(rep.times[i]) + "," + sci(sa.deviations[i]) + "," + sci(rep.step_independent[i]) +
                 "," + sci(rep.linear_coefficient[i]) + "," + sci(rep.step_independent_share(i)) + "\n";
        }
        files["convergence_k" + std::to_string(a.k) + ".csv"] = csv;
      }
    }
  }

  if (cfg.scenario == ScenarioKind::GradientSweep) {
    std::vector<std::vector<NormOrderReport>> runs;
    for (const auto& r : results) runs.push_back(r.reports);
    checks += "stationary_entries_agree," +
              std::string(entries_agree(runs, OrderClass::Stationary, 1e-11) ? "true" : "false") + "\n";
    checks += "oscillatory_entries_agree," +
              std::string(entries_agree(runs, OrderClass::Oscillatory, 1e-11) ? "true" : "false") + "\n";
    have_checks = true;
  }

  if (cfg.scenario == ScenarioKind::ChirpSweep) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& r : results) {
      const auto& c = r.point.config;
      const double tau = LaserPulse::fwhm_from_beta(c.beta_prime);
      const double scale = std::abs(stationary_asymptote(c.mu, c.dt, c.e0_prime, tau));
      double worst = 0.0;
      for (const auto& rep : r.reports) {
        const double pred = stationary_prediction_chirped(c.mu, c.dt, c.e0_prime, tau, c.b2, c.t_d, rep.time);
        worst = std::max(worst, std::abs(rep.entries.front().value - pred) / scale);
      }
      const double final_n2 = r.reports.back().entries.front().value;
      lo = std::min(lo, final_n2);
      hi = std::max(hi, final_n2);
      checks += "erf_max_scaled_error_" + r.point.label + "," + sci(worst) + "\n";
    }
    checks += "final_N_2_relative_spread," + sci((hi - lo) / std::abs(hi)) + "\n";
    have_checks = true;
  }

  if (have_checks) files["checks.csv"] = checks;
  return files;
}

std::string prediction_csv(const ScenarioConfig& cfg) {
  const auto pulse = cfg.pulse();
  std::vector<double> times;
  for (std::size_t step = 0; step <= cfg.n_steps; ++step) {
    if (step % cfg.report_stride == 0 || step == cfg.n_steps) {
      times.push_back(static_cast<double>(step) * cfg.dt);
    }
  }
  const auto set = predict(pulse, cfg.mu, cfg.dt, cfg.k, times);
  std::string out = "t,stationary_envelope,stationary_erf,stationary_asymptote,w_bar";
  for (const auto& term : set.oscillatory_terms) {
    out += ",oscillatory_m" + std::to_string(term.m) + "_order_of_magnitude";
  }
  out += "\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out += sci(times[i]) + "," + sci(set.stationary_leading[i]) + "," + sci(set.stationary_chirped[i]) +
           "," + sci(set.stationary_asymptote) + "," + sci(set.w_bar);
    for (const auto& term : set.oscillatory_terms) out += "," + sci(term.sign * term.magnitude[i]);
    out += "\n";
  }
  return out;
}

}  // namespace tdpt
