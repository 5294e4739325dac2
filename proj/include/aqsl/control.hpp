#pragma once

// Optimal traversal of a fixed path: choose the ramp p(t) that minimizes the
// action. Two independent solvers are provided; the analytic one inverts
// the cumulative arc length (constant metric speed), the numeric one runs a
// projected gradient descent directly on the control dp/dt.

#include <cstddef>
#include <vector>

#include "aqsl/channels.hpp"
#include "aqsl/metrics.hpp"

namespace aqsl {

/// Cumulative metric arc length S(p) of a generated path.
///
/// The table is built on p_k = (1 - cos phi_k) / 2 with phi_k uniform on
/// [0, pi]. The clustering at both ends resolves the sqrt(p) behaviour that
/// distances from a pure state show near p = 0, and S is smooth as a function
/// of phi, so S(phi) is interpolated with monotone cubic Hermite segments.
class ArcLengthTable {
 public:
  ArcLengthTable(const PathGenerator& generator, MetricKind metric, std::size_t cells);

  double total() const noexcept { return cumulative_.back(); }
  std::size_t cells() const noexcept { return cumulative_.size() - 1; }

  double length_at(double p) const;
  /// dS/dp. Diverges like 1/sqrt(p(1-p)) at the ends; p is clamped to
  /// [1e-14, 1 - 1e-14] before evaluation.
  double slope_at(double p) const;
  /// p in [0, 1] with length_at(p) = s; s is clamped to [0, total()].
  double inverse(double s) const;

 private:
  double hermite(std::size_t cell, double u) const;
  double hermite_derivative(std::size_t cell, double u) const;

  double step_;                     // phi spacing
  std::vector<double> cumulative_;  // S at phi_k
  std::vector<double> slope_phi_;   // dS/dphi at phi_k
};

/// Constant-speed ramp on a uniform grid of n_intervals (>= 100) steps over
/// [0, tau]: S(p(t)) = (t / tau) * ell. Uses a table with 4 * n_intervals cells.
/// Throws ZeroLengthPath for a stationary path.
RampProfile arc_length_reparametrize(const PathGenerator& generator, MetricKind metric, double tau,
                                     std::size_t n_intervals);

struct OptimizeOptions {
  std::size_t max_iterations = 100000;
  double tolerance = 1e-10;   // stop once the relative action decrease falls below this
  std::size_t table_cells = 0;  // 0 selects 4 * intervals
};

struct OptimizeResult {
  RampProfile ramp;
  std::vector<double> history;  // action per accepted iterate, starting with the initial ramp
  std::size_t iterations = 0;
};

/// Minimizes a(pdot) = sum_i (S(P_{i+1}) - S(P_i))^2 / dt_i over rates
/// pdot_i >= 0 with sum_i pdot_i dt_i = 1, on the initial ramp's time grid.
/// S comes from an ArcLengthTable, so the per-step cost equals
/// g(p) pdot^2 dt with g = (dS/dp)^2 taken as the secant over the step.
///
/// Each iterate takes a gradient step scaled per interval by 1/g, projects
/// onto the admissible set in the matching weighted norm, and halves the step
/// until the action strictly decreases; a step that cannot decrease it ends
/// the run. The history is therefore strictly decreasing.
/// Throws InadmissibleInitial for ramps with fewer than two intervals and
/// NonConvergenceError when max_iterations is exhausted.
OptimizeResult optimize_ramp(const PathGenerator& generator, MetricKind metric, const RampProfile& initial,
                             const OptimizeOptions& options = {});

}  // namespace aqsl
