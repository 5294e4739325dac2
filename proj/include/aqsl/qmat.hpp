#pragma once

// Small dense complex matrices and the Hermitian spectral routines the rest
// of the library is built on. Dimension 2 takes closed-form paths; larger
// dimensions fall back to cyclic Jacobi sweeps.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace aqsl {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);
  /// Row-major nested initializer, e.g. `{{1, 0}, {0, 1}}`.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zeros(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diag(const std::vector<double>& values);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Complex>& data() const noexcept { return data_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// Largest entrywise modulus.
  double max_abs() const;
  /// Largest entrywise |M - M^dagger|.
  double hermiticity_defect() const;
  /// (M + M^dagger) / 2
  ComplexMatrix hermitian_part() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(ComplexMatrix m, double s) { return m *= Complex(s); }
  friend ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex(s); }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real part of tr(a b) without forming the product.
double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal

  /// V f(diag(lambda)) V^dagger for a scalar map f applied to the spectrum.
  template <typename F>
  ComplexMatrix apply(F&& f) const {
    const std::size_t d = eigenvalues.size();
    ComplexMatrix out(d);
    for (std::size_t k = 0; k < d; ++k) {
      const double fk = f(eigenvalues[k]);
      if (fk == 0.0) continue;
      for (std::size_t i = 0; i < d; ++i) {
        const Complex vik = eigenvectors(i, k) * fk;
        for (std::size_t j = 0; j < d; ++j) out(i, j) += vik * std::conj(eigenvectors(j, k));
      }
    }
    return out;
  }

  ComplexMatrix reconstruct() const {
    return apply([](double x) { return x; });
  }
};

/// Tolerance on max |M - M^dagger| accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalues above -kPsdTol are treated as round-off and clamped to zero.
inline constexpr double kPsdTol = 1e-10;

/// Throws NonHermitianInput if max |M - M^dagger| exceeds kHermitianTol.
HermitianEig eig_hermitian(const ComplexMatrix& m);

/// Principal square root of a positive semi-definite matrix.
///
/// Eigenvalues in [-kPsdTol, 0) are clamped to zero. Nonnegative eigenvalues
/// within a few ulps of zero relative to the spectral radius are also snapped
/// to zero: they are indistinguishable from cancellation noise, and sqrt()
/// would otherwise amplify 1e-17 dust into 3e-9 entries.
ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m);

/// Moore-Penrose inverse of a Hermitian PSD matrix; eigenvalues at or below
/// `cutoff * spectral_radius` are treated as zero.
ComplexMatrix pinv_psd(const ComplexMatrix& m, double cutoff = 1e-12);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

}  // namespace aqsl
