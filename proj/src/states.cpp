#include "aqsl/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "aqsl/error.hpp"

namespace aqsl {

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  if (m.dim() == 0) throw Error(ErrorCode::InvalidState, "empty matrix");
  if (m.hermiticity_defect() > kStateTol) throw Error(ErrorCode::InvalidState, "not Hermitian");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw Error(ErrorCode::InvalidState, "trace " + std::to_string(tr));
  }
  mat_ = m.hermitian_part();
  const HermitianEig e = eig_hermitian(mat_);
  if (e.eigenvalues.front() < -kStateTol) {
    throw Error(ErrorCode::InvalidState, "negative eigenvalue " + std::to_string(e.eigenvalues.front()));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix pure_state_theta(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return DensityMatrix(ComplexMatrix{{c * c, c * s}, {c * s, s * s}});
}

bool theta_is_canonical(double theta) { return theta >= 0.0 && theta <= std::numbers::pi; }

BlochVector to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "Bloch vectors need dim 2");
  const ComplexMatrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + kStateTol) throw Error(ErrorCode::InvalidState, "Bloch vector outside the ball");
  return DensityMatrix(ComplexMatrix{{0.5 * (1.0 + r.z), Complex(0.5 * r.x, -0.5 * r.y)},
                                     {Complex(0.5 * r.x, 0.5 * r.y), 0.5 * (1.0 - r.z)}});
}

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "states of unequal dimension");
}

// Determinant of a 2x2 density matrix with cancellation dust snapped to zero;
// sqrt() of that dust would otherwise leak ~1e-9 into the fidelity.
double qubit_det(const ComplexMatrix& m) {
  const double a = m(0, 0).real(), d = m(1, 1).real();
  const double det = a * d - std::norm(m(0, 1));
  const double snap = 64.0 * std::numeric_limits<double>::epsilon() * (a + d) * (a + d);
  return det <= snap ? 0.0 : det;
}

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

// 1 - F^2 for qubits without cancellation. With Bloch vectors r, s and
// a = 1 - |r|^2 = 4 det(rho), b = 4 det(sigma):
//   1 - F^2 = (|r - s|^2 + (sqrt a - sqrt b)^2) / 4.
double qubit_infidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const ComplexMatrix d = rho - sigma;
  const double dr2 = 4.0 * std::norm(d(0, 1)) + std::norm(d(0, 0).real() - d(1, 1).real());
  const double a = 4.0 * qubit_det(rho), b = 4.0 * qubit_det(sigma);
  const double root_sum = std::sqrt(a) + std::sqrt(b);
  const double root_gap = root_sum > 0.0 ? (a - b) / root_sum : 0.0;
  return std::clamp(0.25 * (dr2 + root_gap * root_gap), 0.0, 1.0);
}

// Angle whose cosine is 1 - h, accurate for small h.
double angle_from_one_minus_cos(double h) {
  h = std::clamp(h, 0.0, 1.0);
  return std::atan2(std::sqrt(h * (2.0 - h)), 1.0 - h);
}

}  // namespace

double fidelity_root(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  if (rho.dim() == 2) return std::sqrt(1.0 - qubit_infidelity(rho.matrix(), sigma.matrix()));
  const ComplexMatrix r = mat_sqrt_psd(rho.matrix());
  const ComplexMatrix inner = (r * sigma.matrix() * r).hermitian_part();
  return std::clamp(mat_sqrt_psd(inner).trace().real(), 0.0, 1.0);
}

double dist_qfi(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  if (rho.dim() == 2) {
    const double q = qubit_infidelity(rho.matrix(), sigma.matrix());
    return std::atan2(std::sqrt(q), std::sqrt(1.0 - q));
  }
  return clamped_acos(fidelity_root(rho, sigma));
}

double dist_wy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  // 1 - tr(sqrt(rho) sqrt(sigma)) = |sqrt(rho) - sqrt(sigma)|_F^2 / 2 for unit-trace inputs.
  const ComplexMatrix gap = mat_sqrt_psd(rho.matrix()) - mat_sqrt_psd(sigma.matrix());
  double h = 0.0;
  for (const Complex& z : gap.data()) h += std::norm(z);
  return angle_from_one_minus_cos(0.5 * h);
}

double dist_td(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  return trace_norm(rho.matrix() - sigma.matrix());
}

}  // namespace aqsl
