// Command-line front end: sweep-theta, paths-bloch, optimize, report.
//
// Exit status: 0 on success, 2 on configuration errors, 3 on numerical failures.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "aqsl/config.hpp"
#include "aqsl/error.hpp"
#include "aqsl/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Overrides {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<double> beta, theta, tau, tol, horizon;
  std::optional<std::size_t> n_time, theta_points, max_iters, profile_points;
  std::optional<std::string> metric, solver, ramp, initial_state;
  bool quiet = false;
  bool history = false;
};

void add_common_options(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_path, "key = value settings file");
  cmd.add_option("--out", o.out_dir, "output directory");
  cmd.add_option("--beta", o.beta, "inverse bath temperature (default 0.5)");
  cmd.add_option("--theta", o.theta, "initial state angle (default pi/3)");
  cmd.add_option("--metric", o.metric, "qfi, wy, td or all");
  cmd.add_option("--n-time", o.n_time, "time steps per path (default 2000)");
  cmd.add_option("--theta-points", o.theta_points, "theta grid size");
  cmd.add_option("--tau", o.tau, "duration in units of 1/(gamma+Gamma)");
  cmd.add_option("--ramp", o.ramp, "uniform, exponential or arclength");
  cmd.add_option("--initial-state", o.initial_state, "pure or steady");
  cmd.add_option("--horizon", o.horizon, "exponential clock cut-off (default 12)");
  cmd.add_option("--solver", o.solver, "pgd or arclength");
  cmd.add_option("--max-iters", o.max_iters, "optimizer iteration cap");
  cmd.add_option("--tol", o.tol, "optimizer relative tolerance");
  cmd.add_option("--profile-points", o.profile_points, "number of ramp profiles written by optimize");
  cmd.add_flag("--history", o.history, "write per-run optimizer histories");
  cmd.add_flag("--quiet", o.quiet, "suppress progress messages");
}

aqsl::Config build_config(const Overrides& o) {
  aqsl::Config c;
  if (!o.config_path.empty()) c = aqsl::load_config(o.config_path, c);
  const auto set = [&c](const char* key, const auto& value) {
    if (!value) return;
    if constexpr (std::is_same_v<std::decay_t<decltype(*value)>, std::string>) {
      aqsl::apply_setting(c, key, *value);
    } else {
      aqsl::apply_setting(c, key, aqsl::format_double(static_cast<double>(*value)));
    }
  };
  set("out_dir", o.out_dir);
  set("beta", o.beta);
  set("theta", o.theta);
  set("tau", o.tau);
  set("tol", o.tol);
  set("horizon", o.horizon);
  set("metric", o.metric);
  set("solver", o.solver);
  set("ramp", o.ramp);
  set("initial_state", o.initial_state);
  if (o.n_time) c.n_time = *o.n_time;
  if (o.theta_points) c.theta_points = *o.theta_points;
  if (o.max_iters) c.max_iters = *o.max_iters;
  if (o.profile_points) c.profile_points = *o.profile_points;
  if (o.quiet) c.quiet = true;
  if (o.history) c.history = true;
  aqsl::validate(c);
  return c;
}

std::ofstream open_output(const aqsl::Config& c, const std::string& name) {
  std::filesystem::create_directories(c.out_dir);
  const auto path = std::filesystem::path(c.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw aqsl::Error(aqsl::ErrorCode::ConfigError, "cannot write " + path.string());
  if (!c.quiet) std::cerr << "writing " << path.string() << "\n";
  return out;
}

int run(const std::string& command, const aqsl::Config& c) {
  if (command == "sweep-theta") {
    const auto rows = aqsl::sweep_theta(c);
    auto out = open_output(c, "sweep_theta.csv");
    aqsl::write_sweep_csv(out, c, rows);
  } else if (command == "paths-bloch") {
    const auto rows = aqsl::paths_bloch(c);
    auto out = open_output(c, "paths_bloch.csv");
    aqsl::write_bloch_csv(out, c, rows);
  } else if (command == "optimize") {
    const auto result = aqsl::optimize_experiment(c);
    {
      auto out = open_output(c, "optimize_summary.csv");
      aqsl::write_summary_csv(out, c, result.summary);
    }
    {
      auto out = open_output(c, "optimize_profiles.csv");
      aqsl::write_profiles_csv(out, c, result.profiles);
    }
    for (const auto& h : result.histories) {
      auto out = open_output(c, "history_" + std::string(aqsl::to_string(h.metric)) + "_theta" +
                                    std::to_string(h.theta_index) + ".csv");
      aqsl::write_history_csv(out, h);
    }
  } else {
    std::cout << aqsl::format_report(c, aqsl::report_experiment(c));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Action and geometric quantum speed limits for a thermalizing qubit"};
  app.require_subcommand(1);
  Overrides overrides;
  for (const char* name : {"sweep-theta", "paths-bloch", "optimize", "report"}) {
    add_common_options(*app.add_subcommand(name), overrides);
  }
  app.get_subcommand("sweep-theta")->description("ratio_geom of every metric over a theta grid");
  app.get_subcommand("paths-bloch")->description("Bloch coordinates of the channel path and the three geodesics");
  app.get_subcommand("optimize")->description("optimal ramps and action ratios over a theta grid");
  app.get_subcommand("report")->description("speed-limit summary of a single run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, build_config(overrides));
  } catch (const aqsl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == aqsl::ErrorCode::ConfigError ? kExitConfig : kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
