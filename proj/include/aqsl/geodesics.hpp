#pragma once

// Closed-form geodesics of the trace-distance, Wigner-Yanase and quantum
// Fisher information metrics. Each generator maps p in [0, 1] to a state;
// p = 0 and p = 1 return the endpoints exactly.

#include <cstddef>

#include "aqsl/channels.hpp"
#include "aqsl/metrics.hpp"
#include "aqsl/states.hpp"

namespace aqsl {

/// (1 - p) rho0 + p rho_tau
PathGenerator td_geodesic_generator(const DensityMatrix& rho0, const DensityMatrix& rho_tau);

/// ((1 - p) sqrt(rho0) + p sqrt(rho_tau))^2, trace-normalized. Throws
/// DegenerateNormalization where the trace drops below 1e-14.
PathGenerator wy_geodesic_generator(const DensityMatrix& rho0, const DensityMatrix& rho_tau);

/// Uhlmann geodesic: normalized w(p) w(p)^dagger with
/// w(p) = (1 - p) w0 + p w_tau, w0 = sum_i sqrt(p_i) |p_i><i| and w_tau the
/// parallel purification of rho_tau. The cross term w_tau w0^dagger is
/// evaluated as rho_tau sqrt(rho0) M^+ sqrt(rho0), M = (sqrt(rho0) rho_tau sqrt(rho0))^{1/2},
/// which equals rho0^{-1/2} M rho0^{1/2} when rho0 is invertible and stays
/// finite when it is not (pure start states). Throws RegularizationFailure if
/// tr(w_tau w0^dagger) misses the root fidelity by more than 1e-6.
PathGenerator qfi_geodesic_generator(const DensityMatrix& rho0, const DensityMatrix& rho_tau);

PathGenerator geodesic_generator(MetricKind metric, const DensityMatrix& rho0, const DensityMatrix& rho_tau);

DiscretizedPath td_geodesic(const DensityMatrix& rho0, const DensityMatrix& rho_tau, const RampProfile& ramp);
DiscretizedPath wy_geodesic(const DensityMatrix& rho0, const DensityMatrix& rho_tau, const RampProfile& ramp);
DiscretizedPath qfi_geodesic(const DensityMatrix& rho0, const DensityMatrix& rho_tau, const RampProfile& ramp);

struct GeodesicLengthCheck {
  double length;    // summed adjacent distances along the generated path
  double distance;  // closed-form geodesic distance of the endpoints
  double gap;       // length / distance - 1
};

/// Generates the metric's geodesic on a uniform ramp with n_intervals steps
/// (at least 100) and compares its summed length with the closed form.
GeodesicLengthCheck geodesic_length_check(MetricKind metric, const DensityMatrix& rho0,
                                          const DensityMatrix& rho_tau, std::size_t n_intervals);

}  // namespace aqsl
