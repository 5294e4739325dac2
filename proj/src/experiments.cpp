#include "aqsl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <ostream>
#include <sstream>

#include "aqsl/channels.hpp"
#include "aqsl/control.hpp"
#include "aqsl/error.hpp"
#include "aqsl/geodesics.hpp"

namespace aqsl {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t theta_points_or(const Config& c, std::size_t fallback) {
  return c.theta_points ? c.theta_points : fallback;
}

void write_settings(std::ostream& out, const Config& c, std::size_t theta_points) {
  out << "# beta=" << format_double(c.beta) << " tau=" << format_double(c.tau) << " n_time=" << c.n_time
      << " ramp=" << c.ramp << " horizon=" << format_double(c.horizon) << " metric=" << c.metric;
  if (theta_points) out << " theta_points=" << theta_points;
  out << "\n# time unit 1/(gamma+Gamma); exponential clock p = (1 - exp(-horizon t/tau)) / (1 - exp(-horizon))\n";
}

struct PathRun {
  DiscretizedPath path;
  QslReport report;
};

}  // namespace

std::vector<double> theta_grid(std::size_t points) {
  if (points < 2) throw Error(ErrorCode::ConfigError, "theta grid needs at least 2 points");
  std::vector<double> out(points);
  for (std::size_t k = 0; k < points; ++k) out[k] = kPi * static_cast<double>(k) / static_cast<double>(points - 1);
  out.back() = kPi;
  return out;
}

std::vector<MetricKind> selected_metrics(const Config& c) {
  if (c.metric == "all") return {std::begin(kAllMetrics), std::end(kAllMetrics)};
  return {parse_metric(c.metric)};
}

double config_theta(const Config& c) { return c.theta.value_or(kPi / 3.0); }

DensityMatrix initial_state(const Config& c) {
  if (c.initial_state == "steady") return steady_state(GadcParams(c.beta));
  return pure_state_theta(config_theta(c));
}

RampProfile make_ramp(const Config& c, const PathGenerator& path, MetricKind metric) {
  if (c.ramp == "uniform") return RampProfile::uniform(c.n_time, c.tau);
  if (c.ramp == "arclength") return arc_length_reparametrize(path, metric, c.tau, c.n_time);
  return RampProfile::exponential_clock(c.n_time, c.tau, c.horizon);
}

std::vector<SweepRow> sweep_theta(const Config& c) {
  validate(c);
  const GadcParams params(c.beta);
  const std::vector<double> grid = theta_grid(theta_points_or(c, kSweepThetaPoints));
  const std::vector<MetricKind> emit = selected_metrics(c);

  const auto per_theta = parallel_map(grid.size(), [&](std::size_t k) {
    const PathGenerator gen = gadc_generator(pure_state_theta(grid[k]), params);
    std::vector<QslReport> reports;
    for (MetricKind m : kAllMetrics) reports.push_back(geometric_qsl(sample_path(gen, make_ramp(c, gen, m)), m));
    const TightestMetric best = tightest_metric(reports);
    std::vector<SweepRow> rows;
    for (const QslReport& r : reports) {
      if (std::find(emit.begin(), emit.end(), r.metric) == emit.end()) continue;
      rows.push_back({grid[k], r.metric, r.geodesic_distance, r.path_length, r.ratio_geom, r.delta,
                      r.metric == best.metric, best.tie});
    }
    return rows;
  });

  std::vector<SweepRow> out;
  for (const auto& rows : per_theta) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

std::vector<BlochRow> paths_bloch(const Config& c) {
  validate(c);
  const GadcParams params(c.beta);
  const DensityMatrix rho0 = initial_state(c);
  const DensityMatrix rho_tau = steady_state(params);
  const RampProfile ramp = RampProfile::uniform(c.n_time, c.tau);

  const std::pair<const char*, PathGenerator> curves[] = {
      {"GADC", gadc_generator(rho0, params)},
      {"TD-geo", td_geodesic_generator(rho0, rho_tau)},
      {"WY-geo", wy_geodesic_generator(rho0, rho_tau)},
      {"QFI-geo", qfi_geodesic_generator(rho0, rho_tau)},
  };
  std::vector<BlochRow> out;
  out.reserve(4 * ramp.size());
  for (const auto& [name, gen] : curves) {
    for (std::size_t i = 0; i < ramp.size(); ++i) {
      const double p = ramp.p_values()[i];
      const BlochVector r = to_bloch(gen(p));
      out.push_back({name, i, p, r.x, r.y, r.z});
    }
  }
  return out;
}

OptimizeOutput optimize_experiment(const Config& c) {
  validate(c);
  const GadcParams params(c.beta);
  const std::vector<double> grid = theta_grid(theta_points_or(c, kOptimizeThetaPoints));
  const std::vector<MetricKind> metrics = selected_metrics(c);
  const RampProfile uniform = RampProfile::uniform(c.n_time, c.tau);
  const OptimizeOptions options{c.max_iters, c.tol, 0};

  std::vector<double> profile_thetas;
  for (std::size_t k = 1; k <= c.profile_points; ++k) {
    profile_thetas.push_back(kPi * static_cast<double>(k) / static_cast<double>(c.profile_points + 1));
  }

  struct Task {
    double theta;
    std::size_t theta_index;
    MetricKind metric;
    bool profile;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < grid.size(); ++k)
    for (MetricKind m : metrics) tasks.push_back({grid[k], k, m, false});
  for (std::size_t k = 0; k < profile_thetas.size(); ++k)
    for (MetricKind m : metrics) tasks.push_back({profile_thetas[k], k, m, true});

  struct TaskResult {
    OptimizeRow row;
    RampProfile optimal = RampProfile::uniform(1);
    std::vector<double> history;
  };
  const auto results = parallel_map(tasks.size(), [&](std::size_t idx) {
    const Task& task = tasks[idx];
    const PathGenerator gen = gadc_generator(pure_state_theta(task.theta), params);
    const RampProfile arclength = arc_length_reparametrize(gen, task.metric, c.tau, c.n_time);

    TaskResult out;
    if (c.solver == "arclength") {
      out.optimal = arclength;
    } else {
      OptimizeResult opt = optimize_ramp(gen, task.metric, uniform, options);
      out.optimal = std::move(opt.ramp);
      out.history = std::move(opt.history);
      out.row.iterations = opt.iterations;
    }
    const QslReport initial = action_qsl(sample_path(gen, uniform), task.metric);
    const QslReport optimal = action_qsl(sample_path(gen, out.optimal), task.metric);
    const QslReport oracle = action_qsl(sample_path(gen, arclength), task.metric);
    out.row.theta = task.theta;
    out.row.metric = task.metric;
    out.row.ratio_geom_initial = initial.ratio_geom;
    out.row.ratio_geom_sq = optimal.ratio_geom * optimal.ratio_geom;
    out.row.ratio_action_initial = initial.ratio_action;
    out.row.ratio_action_optimized = optimal.ratio_action;
    out.row.ratio_action_arclength = oracle.ratio_action;
    return out;
  });

  OptimizeOutput out;
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    const Task& task = tasks[idx];
    const TaskResult& r = results[idx];
    if (!task.profile) {
      out.summary.push_back(r.row);
      if (c.history && !r.history.empty()) out.histories.push_back({task.theta, task.theta_index, task.metric, r.history});
      continue;
    }
    for (std::size_t i = 0; i < uniform.size(); ++i) {
      out.profiles.push_back({task.theta, task.metric, uniform.times()[i] / c.tau, uniform.p_values()[i],
                              r.optimal.p_values()[i]});
    }
  }
  return out;
}

std::vector<QslReport> report_experiment(const Config& c) {
  validate(c);
  const GadcParams params(c.beta);
  const PathGenerator gen = gadc_generator(initial_state(c), params);
  std::vector<QslReport> out;
  for (MetricKind m : selected_metrics(c)) out.push_back(action_qsl(sample_path(gen, make_ramp(c, gen, m)), m));
  return out;
}

std::string format_report(const Config& c, const std::vector<QslReport>& reports) {
  std::ostringstream out;
  out << "theta=" << format_double(config_theta(c)) << " beta=" << format_double(c.beta)
      << " initial_state=" << c.initial_state << " ramp=" << c.ramp << " n_time=" << c.n_time
      << " tau=" << format_double(c.tau) << "\n";
  for (const QslReport& r : reports) {
    out << format_record(r) << "\n";
    const bool chain = r.ratio_action <= r.ratio_geom * r.ratio_geom + 1e-9 && r.ratio_geom <= 1.0 + 1e-9;
    out << "  chain tau_action/tau <= (tau_geom/tau)^2 <= 1: " << (chain ? "holds" : "VIOLATED") << "\n";
  }
  return out.str();
}

void write_sweep_csv(std::ostream& out, const Config& c, const std::vector<SweepRow>& rows) {
  write_settings(out, c, theta_points_or(c, kSweepThetaPoints));
  out << "theta,metric,L,ell,ratio_geom,delta,tightest_flag,tie\n";
  for (const SweepRow& r : rows) {
    out << format_double(r.theta) << ',' << to_string(r.metric) << ',' << format_double(r.L) << ','
        << format_double(r.ell) << ',' << format_double(r.ratio_geom) << ',' << format_double(r.delta) << ','
        << (r.tightest ? 1 : 0) << ',' << (r.tie ? 1 : 0) << '\n';
  }
}

void write_bloch_csv(std::ostream& out, const Config& c, const std::vector<BlochRow>& rows) {
  write_settings(out, c, 0);
  out << "# theta=" << format_double(config_theta(c)) << " initial_state=" << c.initial_state
      << "; every curve sampled on p uniform in [0, 1]\n";
  out << "curve,index,p,x,y,z\n";
  for (const BlochRow& r : rows) {
    out << r.curve << ',' << r.index << ',' << format_double(r.p) << ',' << format_double(r.x) << ','
        << format_double(r.y) << ',' << format_double(r.z) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const Config& c, const std::vector<OptimizeRow>& rows) {
  write_settings(out, c, theta_points_or(c, kOptimizeThetaPoints));
  out << "# solver=" << c.solver << " max_iters=" << c.max_iters << " tol=" << format_double(c.tol)
      << "; initial ramp is uniform in t\n";
  out << "theta,metric,ratio_geom_sq,ratio_action_initial,ratio_action_optimized,ratio_action_arclength,"
         "ratio_geom_initial,iterations\n";
  for (const OptimizeRow& r : rows) {
    out << format_double(r.theta) << ',' << to_string(r.metric) << ',' << format_double(r.ratio_geom_sq) << ','
        << format_double(r.ratio_action_initial) << ',' << format_double(r.ratio_action_optimized) << ','
        << format_double(r.ratio_action_arclength) << ',' << format_double(r.ratio_geom_initial) << ','
        << r.iterations << '\n';
  }
}

void write_profiles_csv(std::ostream& out, const Config& c, const std::vector<ProfileRow>& rows) {
  write_settings(out, c, 0);
  out << "# solver=" << c.solver << " profile_points=" << c.profile_points << "\n";
  out << "theta,metric,t_over_tau,p_initial,p_optimal\n";
  for (const ProfileRow& r : rows) {
    out << format_double(r.theta) << ',' << to_string(r.metric) << ',' << format_double(r.t_over_tau) << ','
        << format_double(r.p_initial) << ',' << format_double(r.p_optimal) << '\n';
  }
}

void write_history_csv(std::ostream& out, const OptimizeHistory& h) {
  out << "# theta=" << format_double(h.theta) << " metric=" << to_string(h.metric) << "\n";
  out << "iter,action\n";
  for (std::size_t i = 0; i < h.action.size(); ++i) out << i << ',' << format_double(h.action[i]) << '\n';
}

}  // namespace aqsl
