#include "aqsl/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "aqsl/error.hpp"

namespace aqsl {

std::string_view to_string(MetricKind metric) {
  switch (metric) {
    case MetricKind::QFI: return "qfi";
    case MetricKind::WY: return "wy";
    case MetricKind::TD: return "td";
  }
  return "?";
}

MetricKind parse_metric(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "qfi") return MetricKind::QFI;
  if (lower == "wy") return MetricKind::WY;
  if (lower == "td") return MetricKind::TD;
  throw Error(ErrorCode::ConfigError, "unknown metric '" + std::string(name) + "' (expected qfi, wy or td)");
}

double geodesic_distance(MetricKind metric, const DensityMatrix& a, const DensityMatrix& b) {
  switch (metric) {
    case MetricKind::QFI: return dist_qfi(a, b);
    case MetricKind::WY: return dist_wy(a, b);
    case MetricKind::TD: return dist_td(a, b);
  }
  throw Error(ErrorCode::ConfigError, "unknown metric");
}

SpeedProfile instantaneous_speed(const DiscretizedPath& path, MetricKind metric) {
  const std::size_t n = path.size();
  if (n < 3) throw Error(ErrorCode::PathTooShort, "speed profile needs at least 3 samples");
  const auto& t = path.times();
  const auto& rho = path.states();
  SpeedProfile out{t, std::vector<double>(n)};
  out.speeds.front() = geodesic_distance(metric, rho[0], rho[1]) / (t[1] - t[0]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out.speeds[i] = geodesic_distance(metric, rho[i - 1], rho[i + 1]) / (t[i + 1] - t[i - 1]);
  }
  out.speeds.back() = geodesic_distance(metric, rho[n - 2], rho[n - 1]) / (t[n - 1] - t[n - 2]);
  return out;
}

std::vector<double> segment_distances(const DiscretizedPath& path, MetricKind metric) {
  if (path.size() < 2) throw Error(ErrorCode::PathTooShort, "need at least 2 samples");
  std::vector<double> d(path.size() - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    d[i] = geodesic_distance(metric, path.states()[i], path.states()[i + 1]);
  }
  return d;
}

double path_length(const DiscretizedPath& path, MetricKind metric) {
  double total = 0.0;
  for (double d : segment_distances(path, metric)) total += d;
  return total;
}

double path_action(const DiscretizedPath& path, MetricKind metric) {
  const std::vector<double> d = segment_distances(path, metric);
  const auto& t = path.times();
  double action = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) action += d[i] * d[i] / (t[i + 1] - t[i]);
  return action;
}

double sld_qfi(const DensityMatrix& rho, const ComplexMatrix& rho_dot, double regularization) {
  const std::size_t d = rho.dim();
  if (rho_dot.dim() != d) throw Error(ErrorCode::DimensionMismatch, "rho_dot dimension");
  if (rho_dot.hermiticity_defect() > kHermitianTol) throw Error(ErrorCode::NonHermitianInput, "rho_dot");

  HermitianEig e = eig_hermitian(rho.matrix());
  const bool rank_deficient = e.eigenvalues.front() < 1e-12;
  if (rank_deficient && regularization > 0.0) {
    for (double& x : e.eigenvalues) x = (1.0 - regularization) * std::max(x, 0.0) + regularization / static_cast<double>(d);
  }

  // rho_dot in the eigenbasis of rho.
  const ComplexMatrix v = e.eigenvectors;
  const ComplexMatrix dot_eig = v.adjoint() * rho_dot * v;

  // tr[rho L^2] = sum_jk lambda_j |L_jk|^2 with L_jk = 2 dot_jk / (lambda_j + lambda_k).
  double fq = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const double denom = std::max(e.eigenvalues[j], 0.0) + std::max(e.eigenvalues[k], 0.0);
      const double mag = std::abs(dot_eig(j, k));
      if (denom < 1e-13) {
        if (mag > 1e-10) throw Error(ErrorCode::RankDeficient, "rho_dot has weight on the kernel of rho");
        continue;
      }
      const double l = 2.0 * mag / denom;
      fq += std::max(e.eigenvalues[j], 0.0) * l * l;
    }
  }
  return fq;
}

}  // namespace aqsl
