#pragma once

// Generalized amplitude damping channel (GADC) on a qubit, in Kraus form
// (driven by a schedule p in [0, 1]) and Lindblad form (driven by time).
//
// Basis convention: |0> is the excited level, sigma_- = |1><0| lowers it with
// emission rate gamma, and sigma_+ raises it with absorption rate Gamma. The
// thermal state is diag(1 - c, c) with c = gamma / (gamma + Gamma).

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "aqsl/qmat.hpp"
#include "aqsl/states.hpp"

namespace aqsl {

class GadcParams {
 public:
  /// Inverse bath temperature `beta` (qubit energy units) and total rate
  /// gamma + Gamma. Throws ParameterOutOfRange if c leaves (0, 1).
  explicit GadcParams(double beta, double rate_scale = 1.0);

  double beta() const noexcept { return beta_; }
  double rate_scale() const noexcept { return rate_scale_; }
  /// Ground-level weight (1 + tanh beta) / 2.
  double c() const noexcept { return c_; }
  /// 1 - c, evaluated without cancellation.
  double one_minus_c() const noexcept { return one_minus_c_; }
  double emission_rate() const noexcept { return rate_scale_ * c_; }
  double absorption_rate() const noexcept { return rate_scale_ * one_minus_c_; }

 private:
  double beta_;
  double rate_scale_;
  double c_;
  double one_minus_c_;
};

/// Monotone schedule p(t) with p(0) = 0 and p(tau) = 1 on a strictly
/// increasing grid starting at t = 0.
class RampProfile {
 public:
  RampProfile(std::vector<double> times, std::vector<double> p_values);

  /// p(t) = t / tau on n_intervals equal steps.
  static RampProfile uniform(std::size_t n_intervals, double tau = 1.0);
  /// Lindblad clock p = 1 - exp(-horizon * t / tau), renormalized so p(tau) = 1.
  static RampProfile exponential_clock(std::size_t n_intervals, double tau = 1.0, double horizon = 12.0);
  /// Samples a monotone map f: [0, 1] -> [0, 1] with f(0) = 0, f(1) = 1 on t / tau.
  static RampProfile from_function(std::size_t n_intervals, double tau, const std::function<double(double)>& f);

  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<double>& p_values() const noexcept { return p_; }
  std::size_t size() const noexcept { return times_.size(); }
  double tau() const noexcept { return times_.back(); }

  /// Piecewise-constant control dp/dt on each interval.
  std::vector<double> rates() const;

 private:
  std::vector<double> times_;
  std::vector<double> p_;
};

/// Ordered samples (t_i, rho_i) of a curve on the state manifold.
class DiscretizedPath {
 public:
  DiscretizedPath(std::vector<double> times, std::vector<DensityMatrix> states);

  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<DensityMatrix>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  double duration() const noexcept { return times_.back() - times_.front(); }
  const DensityMatrix& front() const { return states_.front(); }
  const DensityMatrix& back() const { return states_.back(); }

 private:
  std::vector<double> times_;
  std::vector<DensityMatrix> states_;
};

/// A curve parametrized by p in [0, 1]. Every path in this library (channel
/// or geodesic) is such a map composed with a RampProfile.
using PathGenerator = std::function<DensityMatrix(double)>;

DiscretizedPath sample_path(const PathGenerator& generator, const RampProfile& ramp);

using KrausSet = std::array<ComplexMatrix, 4>;

KrausSet gadc_kraus(double p, double c);

/// sum_k K rho K^dagger. Throws IncompleteKrausSet unless sum K^dagger K = I to 1e-10.
DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const ComplexMatrix> kraus);

DensityMatrix gadc_state(const DensityMatrix& rho0, double p, const GadcParams& params);
PathGenerator gadc_generator(DensityMatrix rho0, GadcParams params);
DiscretizedPath gadc_path(const DensityMatrix& rho0, const RampProfile& ramp, const GadcParams& params);

DensityMatrix steady_state(const GadcParams& params);

/// Right-hand side of the thermal master equation.
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const GadcParams& params);
inline ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const GadcParams& params) {
  return lindblad_rhs(rho.matrix(), params);
}

/// Classical RK4 on [0, t_final] with n_steps equal steps; returns all
/// n_steps + 1 samples. Requires at least 100 steps per unit of
/// (gamma + Gamma) t; the per-step Hermiticity/trace correction must stay
/// below 1e-8. Both failures raise StepSizeTooCoarse.
DiscretizedPath lindblad_propagate(const DensityMatrix& rho0, double t_final, std::size_t n_steps,
                                   const GadcParams& params);

}  // namespace aqsl
