#pragma once

// Seeded random inputs shared by the unit tests.

#include <cmath>
#include <numbers>
#include <random>

#include "aqsl/qmat.hpp"
#include "aqsl/states.hpp"

namespace aqsl::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline double uniform(double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline ComplexMatrix random_hermitian(std::size_t d, double scale = 1.0) {
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = uniform(-scale, scale);
    for (std::size_t j = i + 1; j < d; ++j) {
      m(i, j) = Complex(uniform(-scale, scale), uniform(-scale, scale));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Unitary from Gram-Schmidt on a random complex matrix.
inline ComplexMatrix random_unitary(std::size_t d) {
  ComplexMatrix u(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) u(i, j) = Complex(uniform(-1, 1), uniform(-1, 1));
    for (std::size_t k = 0; k < j; ++k) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < d; ++i) overlap += std::conj(u(i, k)) * u(i, j);
      for (std::size_t i = 0; i < d; ++i) u(i, j) -= overlap * u(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += std::norm(u(i, j));
    for (std::size_t i = 0; i < d; ++i) u(i, j) /= std::sqrt(norm);
  }
  return u;
}

/// PSD matrix with eigenvalues drawn from [0, 1].
inline ComplexMatrix random_psd(std::size_t d) {
  std::vector<double> values(d);
  for (double& v : values) v = uniform();
  const ComplexMatrix u = random_unitary(d);
  return u * ComplexMatrix::diag(values) * u.adjoint();
}

/// Qubit state with Bloch radius drawn in [r_min, r_max].
inline DensityMatrix random_qubit(double r_min = 0.0, double r_max = 1.0) {
  const double z = uniform(-1, 1), phi = uniform(0, 2 * std::numbers::pi);
  const double s = std::sqrt(1 - z * z), r = uniform(r_min, r_max);
  return from_bloch({r * s * std::cos(phi), r * s * std::sin(phi), r * z});
}

}  // namespace aqsl::test
