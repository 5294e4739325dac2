#include "aqsl/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aqsl/error.hpp"

namespace aqsl {

GadcParams::GadcParams(double beta, double rate_scale) : beta_(beta), rate_scale_(rate_scale) {
  if (!std::isfinite(beta)) throw Error(ErrorCode::ParameterOutOfRange, "beta must be finite");
  if (!(rate_scale > 0.0) || !std::isfinite(rate_scale)) {
    throw Error(ErrorCode::ParameterOutOfRange, "rate scale must be positive");
  }
  // c = (1 + tanh beta) / 2 = 1 / (1 + e^{-2 beta}); both branches avoid 1 - c cancellation.
  c_ = 1.0 / (1.0 + std::exp(-2.0 * beta));
  one_minus_c_ = 1.0 / (1.0 + std::exp(2.0 * beta));
  if (!(c_ > 0.0 && c_ < 1.0 && one_minus_c_ > 0.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "beta = " + std::to_string(beta) + " puts c outside (0, 1)");
  }
}

RampProfile::RampProfile(std::vector<double> times, std::vector<double> p_values)
    : times_(std::move(times)), p_(std::move(p_values)) {
  if (times_.size() < 2 || times_.size() != p_.size()) {
    throw Error(ErrorCode::RampInvalid, "ramp needs at least two samples and matching lengths");
  }
  if (std::abs(times_.front()) > 1e-14) throw Error(ErrorCode::RampInvalid, "ramp must start at t = 0");
  times_.front() = 0.0;
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) throw Error(ErrorCode::RampInvalid, "time grid must be strictly increasing");
  }
  if (std::abs(p_.front()) > 1e-12 || std::abs(p_.back() - 1.0) > 1e-12) {
    throw Error(ErrorCode::RampInvalid, "ramp endpoints must be p(0) = 0 and p(tau) = 1");
  }
  for (std::size_t i = 1; i < p_.size(); ++i) {
    if (p_[i] < p_[i - 1] - 1e-14) throw Error(ErrorCode::RampInvalid, "ramp must be nondecreasing");
  }
  p_.front() = 0.0;
  p_.back() = 1.0;
  for (double& p : p_) p = std::clamp(p, 0.0, 1.0);
}

RampProfile RampProfile::from_function(std::size_t n_intervals, double tau, const std::function<double(double)>& f) {
  if (n_intervals < 1) throw Error(ErrorCode::RampInvalid, "need at least one interval");
  if (!(tau > 0.0)) throw Error(ErrorCode::RampInvalid, "tau must be positive");
  std::vector<double> t(n_intervals + 1), p(n_intervals + 1);
  for (std::size_t i = 0; i <= n_intervals; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(n_intervals);
    t[i] = s * tau;
    p[i] = f(s);
  }
  t.back() = tau;
  return RampProfile(std::move(t), std::move(p));
}

RampProfile RampProfile::uniform(std::size_t n_intervals, double tau) {
  return from_function(n_intervals, tau, [](double s) { return s; });
}

RampProfile RampProfile::exponential_clock(std::size_t n_intervals, double tau, double horizon) {
  if (!(horizon > 0.0)) throw Error(ErrorCode::RampInvalid, "horizon must be positive");
  const double norm = -std::expm1(-horizon);
  return from_function(n_intervals, tau, [&](double s) { return -std::expm1(-horizon * s) / norm; });
}

std::vector<double> RampProfile::rates() const {
  std::vector<double> r(times_.size() - 1);
  for (std::size_t i = 0; i + 1 < times_.size(); ++i) r[i] = (p_[i + 1] - p_[i]) / (times_[i + 1] - times_[i]);
  return r;
}

DiscretizedPath::DiscretizedPath(std::vector<double> times, std::vector<DensityMatrix> states)
    : times_(std::move(times)), states_(std::move(states)) {
  if (states_.empty() || times_.size() != states_.size()) {
    throw Error(ErrorCode::PathTooShort, "path needs matching, nonempty time and state lists");
  }
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) throw Error(ErrorCode::RampInvalid, "path times must be strictly increasing");
  }
}

DiscretizedPath sample_path(const PathGenerator& generator, const RampProfile& ramp) {
  std::vector<DensityMatrix> states;
  states.reserve(ramp.size());
  for (double p : ramp.p_values()) states.push_back(generator(p));
  return DiscretizedPath(ramp.times(), std::move(states));
}

KrausSet gadc_kraus(double p, double c) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "p must lie in [0, 1]");
  if (!(c > 0.0 && c < 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "c must lie in (0, 1)");
  const double sc = std::sqrt(c), sd = std::sqrt(1.0 - c);
  const double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
  return {ComplexMatrix{{sc * sq, 0.0}, {0.0, sc}}, ComplexMatrix{{0.0, 0.0}, {sc * sp, 0.0}},
          ComplexMatrix{{sd, 0.0}, {0.0, sd * sq}}, ComplexMatrix{{0.0, sd * sp}, {0.0, 0.0}}};
}

DensityMatrix apply_channel(const DensityMatrix& rho, std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) throw Error(ErrorCode::IncompleteKrausSet, "empty Kraus set");
  const std::size_t d = rho.dim();
  ComplexMatrix completeness(d), out(d);
  for (const auto& k : kraus) {
    if (k.dim() != d) throw Error(ErrorCode::DimensionMismatch, "Kraus operator dimension");
    const ComplexMatrix kd = k.adjoint();
    completeness += kd * k;
    out += k * rho.matrix() * kd;
  }
  const double defect = max_abs_diff(completeness, ComplexMatrix::identity(d));
  if (defect > 1e-10) {
    throw Error(ErrorCode::IncompleteKrausSet, "max |sum K^dagger K - I| = " + std::to_string(defect));
  }
  return DensityMatrix(out.hermitian_part());
}

DensityMatrix gadc_state(const DensityMatrix& rho0, double p, const GadcParams& params) {
  if (rho0.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "the GADC acts on a qubit");
  const KrausSet k = gadc_kraus(p, params.c());
  return apply_channel(rho0, k);
}

PathGenerator gadc_generator(DensityMatrix rho0, GadcParams params) {
  return [rho0 = std::move(rho0), params](double p) { return gadc_state(rho0, p, params); };
}

DiscretizedPath gadc_path(const DensityMatrix& rho0, const RampProfile& ramp, const GadcParams& params) {
  return sample_path(gadc_generator(rho0, params), ramp);
}

DensityMatrix steady_state(const GadcParams& params) {
  return DensityMatrix(ComplexMatrix::diag({params.one_minus_c(), params.c()}));
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const GadcParams& params) {
  if (rho.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "the GADC acts on a qubit");
  static const ComplexMatrix lower{{0.0, 0.0}, {1.0, 0.0}};  // |1><0|
  static const ComplexMatrix raise{{0.0, 1.0}, {0.0, 0.0}};  // |0><1|
  static const ComplexMatrix excited = raise * lower;        // |0><0|
  static const ComplexMatrix ground = lower * raise;         // |1><1|

  const auto dissipator = [&](const ComplexMatrix& jump, const ComplexMatrix& jump_dag, const ComplexMatrix& n) {
    return jump * rho * jump_dag - 0.5 * (rho * n + n * rho);
  };
  return params.emission_rate() * dissipator(lower, raise, excited) +
         params.absorption_rate() * dissipator(raise, lower, ground);
}

DiscretizedPath lindblad_propagate(const DensityMatrix& rho0, double t_final, std::size_t n_steps,
                                   const GadcParams& params) {
  if (!(t_final >= 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "t_final must be nonnegative");
  if (t_final == 0.0) return DiscretizedPath({0.0}, {rho0});

  const double required = std::ceil(100.0 * params.rate_scale() * t_final - 1e-9);
  if (static_cast<double>(n_steps) < required) {
    throw Error(ErrorCode::StepSizeTooCoarse,
                "need at least " + std::to_string(static_cast<long long>(required)) + " steps");
  }

  const double h = t_final / static_cast<double>(n_steps);
  std::vector<double> times{0.0};
  std::vector<DensityMatrix> states{rho0};
  times.reserve(n_steps + 1);
  states.reserve(n_steps + 1);

  ComplexMatrix rho = rho0.matrix();
  for (std::size_t step = 1; step <= n_steps; ++step) {
    const ComplexMatrix k1 = lindblad_rhs(rho, params);
    const ComplexMatrix k2 = lindblad_rhs(rho + (0.5 * h) * k1, params);
    const ComplexMatrix k3 = lindblad_rhs(rho + (0.5 * h) * k2, params);
    const ComplexMatrix k4 = lindblad_rhs(rho + h * k3, params);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double correction = std::max(0.5 * rho.hermiticity_defect(), std::abs(rho.trace().real() - 1.0));
    if (correction > 1e-8) {
      throw Error(ErrorCode::StepSizeTooCoarse, "state guard correction " + std::to_string(correction));
    }
    rho = rho.hermitian_part();
    rho *= 1.0 / rho.trace().real();

    times.push_back(step == n_steps ? t_final : h * static_cast<double>(step));
    states.emplace_back(rho);
  }
  return DiscretizedPath(std::move(times), std::move(states));
}

}  // namespace aqsl
