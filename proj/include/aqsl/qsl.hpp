#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aqsl/channels.hpp"
#include "aqsl/metrics.hpp"

namespace aqsl {

/// Speed-limit summary of one path under one metric.
///
/// `geodesic_distance` is L, `path_length` is ell, `action` is the discrete
/// action, `tau` the path duration. tau_geom = L tau / ell and
/// tau_action = L^2 / action. The QFI fields additionally carry the bound in
/// the normalization L / integral sqrt(F_Q) dt, where the SLD Fisher
/// information F_Q is integrated with the midpoint rule; it differs from
/// tau_geom by the factor 1/2 relating Bures speed and sqrt(F_Q). The fields
/// are NaN for other metrics and for the parts a builder did not fill.
struct QslReport {
  MetricKind metric = MetricKind::QFI;
  double geodesic_distance = 0.0;
  double path_length = 0.0;
  double action = 0.0;
  double tau = 0.0;
  double tau_geom = 0.0;
  double tau_action = 0.0;
  double ratio_geom = 0.0;
  double ratio_action = 0.0;
  double delta = 0.0;
  double tau_qfi_sld = 0.0;
  double ratio_qfi_sld = 0.0;
};

/// Fills L, ell, tau, tau_geom, ratio_geom and delta (= 1 / ratio_geom - 1).
/// Throws ZeroLengthPath when ell <= kZeroLengthTol.
QslReport geometric_qsl(const DiscretizedPath& path, MetricKind metric);

/// Everything in geometric_qsl plus the action bound (and the SLD variant for
/// QFI). Throws ZeroAction when the action vanishes.
QslReport action_qsl(const DiscretizedPath& path, MetricKind metric);

struct TightestMetric {
  MetricKind metric;
  bool tie;  // another report matched the winning ratio within kTieTolerance
};

inline constexpr double kTieTolerance = 1e-8;

/// Metric with the largest ratio_geom (smallest delta). Ties resolve in the
/// order QFI, WY, TD and are flagged. Needs at least two reports.
TightestMetric tightest_metric(std::span<const QslReport> reports);

/// Flat key=value record, keys in a fixed order; values use 17 significant digits.
std::vector<std::pair<std::string, std::string>> to_record(const QslReport& report);
std::string format_record(const QslReport& report);

/// "%.17g" formatting shared by every text output.
std::string format_double(double value);

}  // namespace aqsl
