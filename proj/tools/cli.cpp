#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>

#include "oracle_suite.hpp"
#include "tdpt/diagnostics.hpp"
#include "tdpt/errors.hpp"
#include "tdpt/scenario.hpp"

namespace tdpt::cli {

namespace {

struct Options {
  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> overrides;
  std::size_t jobs = 1;
  std::size_t max_m = 4;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << content;
}

void print_point_summaries(const std::vector<RunResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    const auto& last = r.reports.back();
    const auto onset = divergence_onset(r.reports);
    out << r.point.label << ": t=" << num(last.time) << " total_norm=" << num(last.total_norm)
        << " N_2=" << num(last.entries.front().value)
        << " stationary=" << num(last.stationary_sum()) << " oscillatory=" << num(last.oscillatory_sum())
        << " onset=" << (onset ? num(*onset) : std::string("never"))
        << (r.warnings.empty() ? "" : " [boundary warning]") << '\n';
  }
}

int cmd_run(const Options& o, bool with_analysis, std::ostream& out) {
  const auto cfg = ScenarioConfig::load(o.config_path, o.overrides);
  const auto results = run_scenario(cfg, o.jobs);
  const auto written = write_outputs(o.out_dir, cfg, results);
  print_point_summaries(results, out);
  if (with_analysis) {
    for (const auto& [name, content] : analyze_results(cfg, results)) {
      write_file(std::filesystem::path(o.out_dir) / name, content);
      if (name == "checks.csv") out << content;
    }
  }
  out << "wrote " << written.csv_files.size() << " run file(s) and " << written.manifest.string()
      << '\n';
  return kExitOk;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const auto cfg = ScenarioConfig::load(o.config_path, o.overrides);
  std::filesystem::create_directories(o.out_dir);
  const auto path = std::filesystem::path(o.out_dir) / "predictions.csv";
  write_file(path, prediction_csv(cfg));
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto checks = run_oracle_suite(o.max_m);
  bool all = true;
  out << "| check | result | detail |\n|---|---|---|\n";
  for (const auto& c : checks) {
    out << "| " << c.name << " | " << (c.passed ? "PASS" : "FAIL") << " | " << c.detail << " |\n";
    all = all && c.passed;
  }
  return all ? kExitOk : kExitConfigError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perturbative two-state wave packet simulator", "tdpt"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool jobs) {
    sub->add_option("--config", o.config_path, "Scenario config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", o.out_dir, "Output directory (created if absent)");
    sub->add_option("--set", o.overrides, "Override a config entry, key=value (repeatable)");
    if (jobs) sub->add_option("--jobs", o.jobs, "Worker threads for parameter points")->check(CLI::PositiveNumber);
  };
  auto* run_cmd = app.add_subcommand("run", "Run every parameter point and write CSV files");
  add_common(run_cmd, true);
  auto* sweep_cmd = app.add_subcommand("sweep", "Run and also write scenario analysis tables");
  add_common(sweep_cmd, true);
  auto* predict_cmd = app.add_subcommand("predict", "Write analytic predictions on the report grid");
  add_common(predict_cmd, false);
  auto* oracle_cmd = app.add_subcommand("oracle", "Run the exact identity checks");
  oracle_cmd->add_option("--max-m", o.max_m, "Largest norm order to check")->check(CLI::Range(1, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  set_warning_sink([&err](std::string_view msg) { err << "warning: " << msg << '\n'; });
  struct SinkReset {
    ~SinkReset() { set_warning_sink({}); }
  } reset_sink;
  try {
    if (run_cmd->parsed()) return cmd_run(o, false, out);
    if (sweep_cmd->parsed()) return cmd_run(o, true, out);
    if (predict_cmd->parsed()) return cmd_predict(o, out);
    return cmd_oracle(o, out);
  } catch (const PhysicsGuardError& e) {
    err << "physics guard: " << e.what() << '\n';
    return kExitPhysicsGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace tdpt::cli
