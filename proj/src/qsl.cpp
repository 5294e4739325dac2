#include "aqsl/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "aqsl/error.hpp"

namespace aqsl {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Midpoint-rule integral of sqrt(F_Q) with rho_dot from segment differences.
double integrated_sqrt_fisher(const DiscretizedPath& path) {
  const auto& t = path.times();
  const auto& rho = path.states();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double dt = t[i + 1] - t[i];
    const DensityMatrix mid(0.5 * (rho[i].matrix() + rho[i + 1].matrix()));
    const ComplexMatrix rate = (rho[i + 1].matrix() - rho[i].matrix()) * (1.0 / dt);
    total += std::sqrt(sld_qfi(mid, rate.hermitian_part())) * dt;
  }
  return total;
}

}  // namespace

QslReport geometric_qsl(const DiscretizedPath& path, MetricKind metric) {
  if (path.size() < 2) throw Error(ErrorCode::PathTooShort, "need at least 2 samples");
  QslReport r;
  r.metric = metric;
  r.geodesic_distance = geodesic_distance(metric, path.front(), path.back());
  r.path_length = path_length(path, metric);
  r.tau = path.duration();
  if (r.path_length <= kZeroLengthTol) throw Error(ErrorCode::ZeroLengthPath, "path does not move under this metric");
  r.tau_geom = r.geodesic_distance * r.tau / r.path_length;
  r.ratio_geom = r.tau_geom / r.tau;
  r.delta = 1.0 / r.ratio_geom - 1.0;
  r.action = kNaN;
  r.tau_action = kNaN;
  r.ratio_action = kNaN;
  r.tau_qfi_sld = kNaN;
  r.ratio_qfi_sld = kNaN;
  return r;
}

QslReport action_qsl(const DiscretizedPath& path, MetricKind metric) {
  QslReport r = geometric_qsl(path, metric);
  r.action = path_action(path, metric);
  if (!(r.action > 0.0)) throw Error(ErrorCode::ZeroAction, "action vanishes");
  r.tau_action = r.geodesic_distance * r.geodesic_distance / r.action;
  r.ratio_action = r.tau_action / r.tau;
  if (metric == MetricKind::QFI) {
    r.tau_qfi_sld = r.geodesic_distance / integrated_sqrt_fisher(path);
    r.ratio_qfi_sld = r.tau_qfi_sld / r.tau;
  }
  return r;
}

TightestMetric tightest_metric(std::span<const QslReport> reports) {
  if (reports.size() < 2) throw Error(ErrorCode::EmptyInput, "need at least two reports to compare");
  double top = reports.front().ratio_geom;
  for (const auto& r : reports) top = std::max(top, r.ratio_geom);

  const QslReport* best = nullptr;
  int contenders = 0;
  for (const auto& r : reports) {
    if (r.ratio_geom < top - kTieTolerance) continue;
    ++contenders;
    if (best == nullptr || static_cast<int>(r.metric) < static_cast<int>(best->metric)) best = &r;
  }
  return {best->metric, contenders > 1};
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<std::pair<std::string, std::string>> to_record(const QslReport& r) {
  return {{"metric", std::string(to_string(r.metric))},
          {"L", format_double(r.geodesic_distance)},
          {"ell", format_double(r.path_length)},
          {"action", format_double(r.action)},
          {"tau", format_double(r.tau)},
          {"tau_geom", format_double(r.tau_geom)},
          {"tau_action", format_double(r.tau_action)},
          {"ratio_geom", format_double(r.ratio_geom)},
          {"ratio_action", format_double(r.ratio_action)},
          {"delta", format_double(r.delta)},
          {"tau_qfi_sld", format_double(r.tau_qfi_sld)},
          {"ratio_qfi_sld", format_double(r.ratio_qfi_sld)}};
}

std::string format_record(const QslReport& report) {
  std::string out;
  for (const auto& [key, value] : to_record(report)) {
    if (!out.empty()) out += ' ';
    out += key + '=' + value;
  }
  return out;
}

}  // namespace aqsl
