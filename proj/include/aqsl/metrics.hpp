#pragma once

#include <string_view>
#include <vector>

#include "aqsl/channels.hpp"
#include "aqsl/qmat.hpp"
#include "aqsl/states.hpp"

namespace aqsl {

enum class MetricKind { QFI, WY, TD };

inline constexpr MetricKind kAllMetrics[] = {MetricKind::QFI, MetricKind::WY, MetricKind::TD};

/// Paths whose length does not exceed this are treated as stationary.
inline constexpr double kZeroLengthTol = 1e-10;

std::string_view to_string(MetricKind metric);
/// Accepts "qfi", "wy", "td" (case-insensitive); throws ConfigError otherwise.
MetricKind parse_metric(std::string_view name);

/// Closed-form geodesic distance of the metric.
double geodesic_distance(MetricKind metric, const DensityMatrix& a, const DensityMatrix& b);

struct SpeedProfile {
  std::vector<double> times;
  std::vector<double> speeds;
};

/// Node speeds from finite differences of the geodesic distance: centered
/// L(rho_{i-1}, rho_{i+1}) / (t_{i+1} - t_{i-1}) inside, one-sided at the ends.
SpeedProfile instantaneous_speed(const DiscretizedPath& path, MetricKind metric);

/// L(rho_i, rho_{i+1}) for every adjacent pair.
std::vector<double> segment_distances(const DiscretizedPath& path, MetricKind metric);

/// Sum of adjacent geodesic distances.
double path_length(const DiscretizedPath& path, MetricKind metric);

/// Discrete action sum_i L(rho_i, rho_{i+1})^2 / dt_i, i.e. the squared
/// segment speed integrated over each interval. With this quadrature
/// tau * action >= length^2 holds exactly (discrete Cauchy-Schwarz).
double path_action(const DiscretizedPath& path, MetricKind metric);

/// Quantum Fisher information tr[rho L^2] with the symmetric logarithmic
/// derivative solving rho L + L rho = 2 rho_dot, solved in the eigenbasis of
/// rho. Rank-deficient rho is mixed with `regularization` * I / d first; with
/// regularization = 0 a kernel block of rho_dot raises RankDeficient.
double sld_qfi(const DensityMatrix& rho, const ComplexMatrix& rho_dot, double regularization = 1e-12);

}  // namespace aqsl
