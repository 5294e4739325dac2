#pragma once

// Experiment drivers behind the command-line tool. Each driver returns plain
// rows; the write_* helpers turn them into CSV with '#' comment lines that
// record the settings, followed by one header row.

#include <cstddef>
#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "aqsl/config.hpp"
#include "aqsl/qsl.hpp"

namespace aqsl {

inline constexpr std::size_t kSweepThetaPoints = 61;
inline constexpr std::size_t kOptimizeThetaPoints = 21;

/// `points` values spread uniformly over [0, pi], both ends included.
std::vector<double> theta_grid(std::size_t points);
std::vector<MetricKind> selected_metrics(const Config& config);
double config_theta(const Config& config);

/// Start state selected by `initial_state` (pure state at theta, or the steady state).
DensityMatrix initial_state(const Config& config);
/// Ramp selected by `ramp`; `arclength` needs the path and metric.
RampProfile make_ramp(const Config& config, const PathGenerator& path, MetricKind metric);

struct SweepRow {
  double theta;
  MetricKind metric;
  double L;
  double ell;
  double ratio_geom;
  double delta;
  bool tightest;
  bool tie;
};

/// GADC path from the pure state at each theta under the configured ramp
/// (exponential clock by default). The tightest flag is decided over all
/// three metrics even when only some are emitted.
std::vector<SweepRow> sweep_theta(const Config& config);

struct BlochRow {
  std::string curve;  // GADC, TD-geo, WY-geo or QFI-geo
  std::size_t index;
  double p;
  double x, y, z;
};

std::vector<BlochRow> paths_bloch(const Config& config);

struct OptimizeRow {
  double theta;
  MetricKind metric;
  double ratio_geom_initial;      // uniform ramp
  double ratio_geom_sq;           // squared, optimized ramp
  double ratio_action_initial;    // uniform ramp
  double ratio_action_optimized;
  double ratio_action_arclength;  // analytic constant-speed ramp
  std::size_t iterations;
};

struct ProfileRow {
  double theta;
  MetricKind metric;
  double t_over_tau;
  double p_initial;
  double p_optimal;
};

struct OptimizeHistory {
  double theta;
  std::size_t theta_index;
  MetricKind metric;
  std::vector<double> action;
};

struct OptimizeOutput {
  std::vector<OptimizeRow> summary;
  std::vector<ProfileRow> profiles;
  std::vector<OptimizeHistory> histories;
};

/// Optimal ramps on the theta grid (default 21 points) starting from the
/// uniform ramp, plus ramp profiles at theta = k pi / (profile_points + 1).
OptimizeOutput optimize_experiment(const Config& config);

/// One report per selected metric at (theta, beta) under the configured ramp.
std::vector<QslReport> report_experiment(const Config& config);
std::string format_report(const Config& config, const std::vector<QslReport>& reports);

void write_sweep_csv(std::ostream& out, const Config& config, const std::vector<SweepRow>& rows);
void write_bloch_csv(std::ostream& out, const Config& config, const std::vector<BlochRow>& rows);
void write_summary_csv(std::ostream& out, const Config& config, const std::vector<OptimizeRow>& rows);
void write_profiles_csv(std::ostream& out, const Config& config, const std::vector<ProfileRow>& rows);
void write_history_csv(std::ostream& out, const OptimizeHistory& history);

/// Runs f(0) ... f(count - 1) on a pool of worker threads and returns the
/// results in index order. The first exception (by index) is rethrown.
template <class F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace aqsl
