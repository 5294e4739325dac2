#include "aqsl/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "aqsl/error.hpp"

namespace aqsl {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::DimensionMismatch, "entry count must equal dim^2");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& values) {
  ComplexMatrix out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw Error(ErrorCode::DimensionMismatch, "operator*");
  const std::size_t d = lhs.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex(0.0)) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "trace_product_real");
  double t = 0.0;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) t += (a(i, k) * b(k, i)).real();
  return t;
}

namespace {

HermitianEig eig_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double scale = std::max({std::abs(a), std::abs(d), std::abs(b), 1e-300});

  HermitianEig out{{0.0, 0.0}, ComplexMatrix::identity(2)};
  if (std::abs(b) <= std::numeric_limits<double>::epsilon() * 1e-3 * scale) {
    if (a <= d) {
      out.eigenvalues = {a, d};
    } else {
      out.eigenvalues = {d, a};
      out.eigenvectors = ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    }
    return out;
  }

  const double mean = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  const double radius = std::hypot(half_gap, std::abs(b));
  const double det = a * d - std::norm(b);
  double lo, hi;
  // The eigenvalue of smaller modulus comes from det / (larger) to avoid
  // cancellation in mean - radius.
  if (mean >= 0.0) {
    hi = mean + radius;
    lo = det / hi;
  } else {
    lo = mean - radius;
    hi = det / lo;
  }
  if (lo > hi) std::swap(lo, hi);

  // Null vector of (M - lo I); pick the better conditioned of two candidates.
  Complex v0 = b, v1 = lo - a;
  const Complex w0 = lo - d, w1 = std::conj(b);
  if (std::norm(w0) + std::norm(w1) > std::norm(v0) + std::norm(v1)) {
    v0 = w0;
    v1 = w1;
  }
  const double n = std::sqrt(std::norm(v0) + std::norm(v1));
  v0 /= n;
  v1 /= n;

  out.eigenvalues = {lo, hi};
  out.eigenvectors = ComplexMatrix{{v0, -std::conj(v1)}, {v1, std::conj(v0)}};
  return out;
}

HermitianEig eig_jacobi(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(a.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= 1e-300) continue;
        const Complex phase = a(p, q) / r;  // e^{i phi}
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = diag-phase * real rotation; only rows/cols p,q differ from I.
        const Complex upp = c, upq = s;
        const Complex uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // a <- a U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // a <- U^dagger a
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {  // v <- v U
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEig out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace

HermitianEig eig_hermitian(const ComplexMatrix& m) {
  if (m.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol) {
    throw Error(ErrorCode::NonHermitianInput, "max |M - M^dagger| = " + std::to_string(defect));
  }
  if (m.dim() == 1) return {{m(0, 0).real()}, ComplexMatrix::identity(1)};
  if (m.dim() == 2) return eig_2x2(m);
  return eig_jacobi(m);
}

ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m) {
  const HermitianEig e = eig_hermitian(m);
  if (e.eigenvalues.front() < -kPsdTol) {
    throw Error(ErrorCode::NotPositiveSemiDefinite,
                "smallest eigenvalue " + std::to_string(e.eigenvalues.front()));
  }
  const double snap = 64.0 * std::numeric_limits<double>::epsilon() * std::max(e.eigenvalues.back(), 0.0);
  return e.apply([snap](double x) { return x <= snap ? 0.0 : std::sqrt(x); });
}

ComplexMatrix pinv_psd(const ComplexMatrix& m, double cutoff) {
  const HermitianEig e = eig_hermitian(m);
  if (e.eigenvalues.front() < -kPsdTol) {
    throw Error(ErrorCode::NotPositiveSemiDefinite, "pinv_psd");
  }
  const double floor = cutoff * std::max(e.eigenvalues.back(), 0.0);
  return e.apply([floor](double x) { return x <= floor ? 0.0 : 1.0 / x; });
}

double trace_norm(const ComplexMatrix& m) {
  const HermitianEig e = eig_hermitian(m);
  double s = 0.0;
  for (double x : e.eigenvalues) s += std::abs(x);
  return s;
}

}  // namespace aqsl
