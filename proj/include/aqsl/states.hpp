#pragma once

#include <cstddef>

#include "aqsl/qmat.hpp"

namespace aqsl {

/// Unit-trace positive semi-definite Hermitian matrix. Construction validates
/// the invariants (tolerance 1e-10) and throws InvalidState otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);

  static DensityMatrix maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

 private:
  ComplexMatrix mat_;
};

inline constexpr double kStateTol = 1e-10;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// Projector onto cos(theta)|0> + sin(theta)|1>. The map is pi-periodic, so
/// angles outside [0, pi] are accepted; see `theta_is_canonical`.
DensityMatrix pure_state_theta(double theta);
bool theta_is_canonical(double theta);

BlochVector to_bloch(const DensityMatrix& rho);
DensityMatrix from_bloch(const BlochVector& r);

/// tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1].
double fidelity_root(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Bures angle, arccos of the root fidelity. Range [0, pi/2].
double dist_qfi(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Bhattacharyya angle, arccos tr(sqrt(rho) sqrt(sigma)).
double dist_wy(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Unnormalized trace norm ||rho - sigma||_1 (orthogonal pure states sit at 2).
double dist_td(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace aqsl
