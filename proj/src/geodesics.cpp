#include "aqsl/geodesics.hpp"

#include <cmath>
#include <string>

#include "aqsl/error.hpp"

namespace aqsl {

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "geodesic endpoints differ in dimension");
}

// Endpoints are returned verbatim so paths start and end exactly on the inputs.
template <typename Interior>
PathGenerator with_exact_endpoints(DensityMatrix rho0, DensityMatrix rho_tau, Interior interior) {
  return [rho0 = std::move(rho0), rho_tau = std::move(rho_tau), interior = std::move(interior)](double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::RampInvalid, "p outside [0, 1]");
    if (p == 0.0) return rho0;
    if (p == 1.0) return rho_tau;
    return interior(p);
  };
}

}  // namespace

PathGenerator td_geodesic_generator(const DensityMatrix& rho0, const DensityMatrix& rho_tau) {
  require_same_dim(rho0, rho_tau);
  return with_exact_endpoints(rho0, rho_tau, [a = rho0.matrix(), b = rho_tau.matrix()](double p) {
    return DensityMatrix((1.0 - p) * a + p * b);
  });
}

PathGenerator wy_geodesic_generator(const DensityMatrix& rho0, const DensityMatrix& rho_tau) {
  require_same_dim(rho0, rho_tau);
  return with_exact_endpoints(
      rho0, rho_tau, [a = mat_sqrt_psd(rho0.matrix()), b = mat_sqrt_psd(rho_tau.matrix())](double p) {
        const ComplexMatrix mix = (1.0 - p) * a + p * b;
        ComplexMatrix sq = mix * mix;
        const double norm = sq.trace().real();
        if (norm < 1e-14) {
          throw Error(ErrorCode::DegenerateNormalization, "antipodal endpoints; the geodesic is not unique");
        }
        sq *= 1.0 / norm;
        return DensityMatrix(sq.hermitian_part());
      });
}

PathGenerator qfi_geodesic_generator(const DensityMatrix& rho0, const DensityMatrix& rho_tau) {
  require_same_dim(rho0, rho_tau);
  const ComplexMatrix root0 = mat_sqrt_psd(rho0.matrix());
  const ComplexMatrix inner = (root0 * rho_tau.matrix() * root0).hermitian_part();
  const ComplexMatrix m = mat_sqrt_psd(inner);
  const ComplexMatrix cross = rho_tau.matrix() * root0 * pinv_psd(m) * root0;  // w_tau w0^dagger

  const double overlap = cross.trace().real();
  const double fidelity = fidelity_root(rho0, rho_tau);
  if (std::abs(overlap - fidelity) > 1e-6) {
    throw Error(ErrorCode::RegularizationFailure,
                "purification overlap " + std::to_string(overlap) + " vs root fidelity " + std::to_string(fidelity));
  }
  const ComplexMatrix cross_sym = cross + cross.adjoint();

  return with_exact_endpoints(rho0, rho_tau, [a = rho0.matrix(), b = rho_tau.matrix(), cross_sym](double p) {
    const double q = 1.0 - p;
    ComplexMatrix w = (q * q) * a + (p * p) * b + (p * q) * cross_sym;
    w *= 1.0 / w.trace().real();  // ||w(p)||_F^2
    return DensityMatrix(w.hermitian_part());
  });
}

PathGenerator geodesic_generator(MetricKind metric, const DensityMatrix& rho0, const DensityMatrix& rho_tau) {
  switch (metric) {
    case MetricKind::QFI: return qfi_geodesic_generator(rho0, rho_tau);
    case MetricKind::WY: return wy_geodesic_generator(rho0, rho_tau);
    case MetricKind::TD: return td_geodesic_generator(rho0, rho_tau);
  }
  throw Error(ErrorCode::ConfigError, "unknown metric");
}

DiscretizedPath td_geodesic(const DensityMatrix& rho0, const DensityMatrix& rho_tau, const RampProfile& ramp) {
  return sample_path(td_geodesic_generator(rho0, rho_tau), ramp);
}

DiscretizedPath wy_geodesic(const DensityMatrix& rho0, const DensityMatrix& rho_tau, const RampProfile& ramp) {
  return sample_path(wy_geodesic_generator(rho0, rho_tau), ramp);
}

DiscretizedPath qfi_geodesic(const DensityMatrix& rho0, const DensityMatrix& rho_tau, const RampProfile& ramp) {
  return sample_path(qfi_geodesic_generator(rho0, rho_tau), ramp);
}

GeodesicLengthCheck geodesic_length_check(MetricKind metric, const DensityMatrix& rho0,
                                          const DensityMatrix& rho_tau, std::size_t n_intervals) {
  if (n_intervals < 100) throw Error(ErrorCode::PathTooShort, "length check needs N >= 100");
  const DiscretizedPath path = sample_path(geodesic_generator(metric, rho0, rho_tau), RampProfile::uniform(n_intervals));
  const double length = path_length(path, metric);
  const double distance = geodesic_distance(metric, rho0, rho_tau);
  const double gap = distance > 0.0 ? length / distance - 1.0 : 0.0;
  return {length, distance, gap};
}

}  // namespace aqsl
