#include "aqsl/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "aqsl/error.hpp"

namespace aqsl {

namespace {

double p_of_phi(double phi) { return 0.5 * (1.0 - std::cos(phi)); }

double phi_of_p(double p) { return std::acos(std::clamp(1.0 - 2.0 * p, -1.0, 1.0)); }

}  // namespace

ArcLengthTable::ArcLengthTable(const PathGenerator& generator, MetricKind metric, std::size_t cells) {
  if (cells < 2) throw Error(ErrorCode::PathTooShort, "arc-length table needs at least 2 cells");
  step_ = std::numbers::pi / static_cast<double>(cells);

  std::vector<DensityMatrix> states;
  states.reserve(cells + 1);
  for (std::size_t k = 0; k <= cells; ++k) {
    const double p = k == cells ? 1.0 : p_of_phi(step_ * static_cast<double>(k));
    states.push_back(generator(k == 0 ? 0.0 : p));
  }
  cumulative_.assign(cells + 1, 0.0);
  for (std::size_t k = 0; k < cells; ++k) {
    cumulative_[k + 1] = cumulative_[k] + geodesic_distance(metric, states[k], states[k + 1]);
  }

  // Second-order finite differences for dS/dphi, then the Fritsch-Carlson
  // limiter so every Hermite cell stays monotone.
  const std::size_t n = cells;
  slope_phi_.assign(n + 1, 0.0);
  const auto& s = cumulative_;
  slope_phi_[0] = (-3.0 * s[0] + 4.0 * s[1] - s[2]) / (2.0 * step_);
  slope_phi_[n] = (3.0 * s[n] - 4.0 * s[n - 1] + s[n - 2]) / (2.0 * step_);
  for (std::size_t k = 1; k < n; ++k) slope_phi_[k] = (s[k + 1] - s[k - 1]) / (2.0 * step_);
  for (std::size_t k = 0; k < n; ++k) {
    const double secant = (s[k + 1] - s[k]) / step_;
    if (secant <= 0.0) {
      slope_phi_[k] = 0.0;
      slope_phi_[k + 1] = 0.0;
      continue;
    }
    slope_phi_[k] = std::clamp(slope_phi_[k], 0.0, 3.0 * secant);
    slope_phi_[k + 1] = std::clamp(slope_phi_[k + 1], 0.0, 3.0 * secant);
  }
}

double ArcLengthTable::hermite(std::size_t k, double u) const {
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
  const double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
  return h00 * cumulative_[k] + h10 * step_ * slope_phi_[k] + h01 * cumulative_[k + 1] +
         h11 * step_ * slope_phi_[k + 1];
}

double ArcLengthTable::hermite_derivative(std::size_t k, double u) const {
  const double u2 = u * u;
  const double d00 = 6 * u2 - 6 * u, d10 = 3 * u2 - 4 * u + 1;
  const double d01 = -6 * u2 + 6 * u, d11 = 3 * u2 - 2 * u;
  return (d00 * cumulative_[k] + d01 * cumulative_[k + 1]) / step_ + d10 * slope_phi_[k] + d11 * slope_phi_[k + 1];
}

double ArcLengthTable::length_at(double p) const {
  const double phi = phi_of_p(p);
  const std::size_t k = std::min(static_cast<std::size_t>(phi / step_), cells() - 1);
  return hermite(k, phi / step_ - static_cast<double>(k));
}

double ArcLengthTable::slope_at(double p) const {
  p = std::clamp(p, 1e-14, 1.0 - 1e-14);
  const double phi = phi_of_p(p);
  const std::size_t k = std::min(static_cast<std::size_t>(phi / step_), cells() - 1);
  return hermite_derivative(k, phi / step_ - static_cast<double>(k)) / std::sqrt(p * (1.0 - p));
}

double ArcLengthTable::inverse(double s) const {
  if (s <= 0.0) return 0.0;
  if (s >= total()) return 1.0;
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  const std::size_t k = static_cast<std::size_t>(std::distance(cumulative_.begin(), it)) - 1;
  // Safeguarded Newton on the monotone cubic in u in [0, 1].
  double lo = 0.0, hi = 1.0;
  double u = (s - cumulative_[k]) / (cumulative_[k + 1] - cumulative_[k]);
  for (int iter = 0; iter < 100; ++iter) {
    const double f = hermite(k, u) - s;
    if (f > 0.0) hi = u; else lo = u;
    const double df = hermite_derivative(k, u) * step_;
    double next = df > 0.0 ? u - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) < 1e-15) {
      u = next;
      break;
    }
    u = next;
  }
  return p_of_phi(step_ * (static_cast<double>(k) + u));
}

RampProfile arc_length_reparametrize(const PathGenerator& generator, MetricKind metric, double tau,
                                     std::size_t n_intervals) {
  if (n_intervals < 100) throw Error(ErrorCode::ParameterOutOfRange, "arc-length reparametrization needs N >= 100");
  if (!(tau > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "tau must be positive");
  const ArcLengthTable table(generator, metric, 4 * n_intervals);
  const double ell = table.total();
  if (ell <= kZeroLengthTol) throw Error(ErrorCode::ZeroLengthPath, "path does not move under this metric");

  std::vector<double> t(n_intervals + 1), p(n_intervals + 1);
  for (std::size_t i = 0; i <= n_intervals; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(n_intervals);
    t[i] = frac * tau;
    p[i] = table.inverse(frac * ell);
  }
  t.back() = tau;
  p.front() = 0.0;
  p.back() = 1.0;
  return RampProfile(std::move(t), std::move(p));
}

namespace {

struct ControlProblem {
  const ArcLengthTable& table;
  std::vector<double> dt;

  std::size_t size() const { return dt.size(); }

  std::vector<double> cumulative(const std::vector<double>& rate) const {
    std::vector<double> p(rate.size() + 1, 0.0);
    for (std::size_t i = 0; i < rate.size(); ++i) p[i + 1] = p[i] + rate[i] * dt[i];
    p.back() = 1.0;
    return p;
  }

  double action(const std::vector<double>& p, std::vector<double>* lengths = nullptr) const {
    double a = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      const double next = i + 1 == size() ? table.total() : table.length_at(std::clamp(p[i + 1], 0.0, 1.0));
      const double ds = next - prev;
      if (lengths) (*lengths)[i] = ds;
      a += ds * ds / dt[i];
      prev = next;
    }
    return a;
  }

  // y_i = max(0, v_i - theta w_i) with sum y_i dt_i = 1.
  std::vector<double> project(const std::vector<double>& v, const std::vector<double>& w) const {
    const auto mass = [&](double theta) {
      double m = 0.0;
      for (std::size_t i = 0; i < size(); ++i) m += std::max(0.0, v[i] - theta * w[i]) * dt[i];
      return m;
    };
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size(); ++i) hi = std::max(hi, v[i] / w[i]);
    double lo = std::min(hi, 0.0) - 1.0;
    while (mass(lo) < 1.0) lo = hi - 2.0 * (hi - lo);
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++iter) {
      const double mid = 0.5 * (lo + hi);
      (mass(mid) >= 1.0 ? lo : hi) = mid;
    }
    std::vector<double> y(size());
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      y[i] = std::max(0.0, v[i] - lo * w[i]);
      m += y[i] * dt[i];
    }
    for (double& yi : y) yi /= m;
    return y;
  }
};

}  // namespace

OptimizeResult optimize_ramp(const PathGenerator& generator, MetricKind metric, const RampProfile& initial,
                             const OptimizeOptions& options) {
  const std::size_t n = initial.size() - 1;
  if (n < 2) throw Error(ErrorCode::InadmissibleInitial, "need at least two control intervals");
  const ArcLengthTable table(generator, metric, options.table_cells ? options.table_cells : 4 * n);
  if (table.total() <= kZeroLengthTol) throw Error(ErrorCode::ZeroLengthPath, "path does not move under this metric");

  ControlProblem problem{table, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) problem.dt[i] = initial.times()[i + 1] - initial.times()[i];

  std::vector<double> rate = initial.rates();
  {
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rate[i] < 0.0) throw Error(ErrorCode::InadmissibleInitial, "negative control rate");
      mass += rate[i] * problem.dt[i];
    }
    if (std::abs(mass - 1.0) > 1e-10) throw Error(ErrorCode::InadmissibleInitial, "rates do not integrate to 1");
  }

  std::vector<double> p = initial.p_values();
  std::vector<double> lengths(n);
  double action = problem.action(p, &lengths);
  OptimizeResult result{initial, {action}, 0};

  std::vector<double> grad(n), weight(n), trial(n);
  bool converged = false;
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    // dA/dP at interior nodes, accumulated into the function-space gradient
    // G_j = sum_{i > j} dA/dP_i with respect to rate_j.
    double suffix = 0.0;
    grad[n - 1] = 0.0;
    for (std::size_t i = n - 1; i >= 1; --i) {
      const double dadp = 2.0 * table.slope_at(p[i]) * (lengths[i - 1] / problem.dt[i - 1] - lengths[i] / problem.dt[i]);
      suffix += dadp;
      grad[i - 1] = suffix;
    }
    double max_g = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double slope = table.slope_at(0.5 * (p[i] + p[i + 1]));
      weight[i] = slope * slope;
      max_g = std::max(max_g, weight[i]);
    }
    for (double& w : weight) w = 1.0 / std::max(w, 1e-12 * max_g);

    double eta = 0.5;
    bool accepted = false;
    std::vector<double> next_p, next_lengths(n);
    double next_action = action;
    while (eta > 1e-12) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = rate[i] - eta * weight[i] * grad[i];
      const std::vector<double> candidate = problem.project(trial, weight);
      next_p = problem.cumulative(candidate);
      next_action = problem.action(next_p, &next_lengths);
      if (next_action < action) {
        rate = candidate;
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    result.iterations = iter + 1;
    if (!accepted) {
      converged = true;
      break;
    }
    const double decrease = (action - next_action) / action;
    p = std::move(next_p);
    lengths = next_lengths;
    action = next_action;
    result.history.push_back(action);
    if (decrease < options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NonConvergenceError("no convergence after " + std::to_string(options.max_iterations) + " iterations",
                              std::move(result.history));
  }
  result.ramp = RampProfile(initial.times(), p);
  return result;
}

}  // namespace aqsl
