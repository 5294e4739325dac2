#include <doctest.h>

#include <cmath>

#include "aqsl/error.hpp"
#include "aqsl/qmat.hpp"
#include "support.hpp"

using namespace aqsl;
using aqsl::test::random_hermitian;
using aqsl::test::random_psd;

namespace {
const Complex I(0.0, 1.0);

double unitarity_defect(const ComplexMatrix& v) {
  return max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(v.dim()));
}
}  // namespace

TEST_CASE("eig_hermitian worked examples") {
  SUBCASE("diagonal input keeps the identity basis") {
    const HermitianEig e = eig_hermitian(ComplexMatrix::diag({1.0, 3.0}));
    CHECK(e.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(3.0));
    CHECK(max_abs_diff(e.eigenvectors, ComplexMatrix::identity(2)) < 1e-15);
  }
  SUBCASE("Pauli x") {
    const HermitianEig e = eig_hermitian(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("[[2, i], [-i, 2]]") {
    const ComplexMatrix m{{2.0, I}, {-I, 2.0}};
    const HermitianEig e = eig_hermitian(m);
    CHECK(e.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(max_abs_diff(e.reconstruct(), m) < 1e-14);
  }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  const ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
  try {
    eig_hermitian(m);
    FAIL("expected NonHermitianInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHermitianInput);
  }
  // Dust below the tolerance is accepted.
  CHECK_NOTHROW(eig_hermitian(ComplexMatrix{{1.0, 1e-12}, {0.0, 1.0}}));
}

TEST_CASE("2x2 reconstruction and orthonormality on random Hermitian input") {
  for (int trial = 0; trial < 2000; ++trial) {
    const ComplexMatrix m = random_hermitian(2);
    const HermitianEig e = eig_hermitian(m);
    REQUIRE(e.eigenvalues[0] <= e.eigenvalues[1]);
    CHECK(max_abs_diff(e.reconstruct(), m) < 1e-12);
    CHECK(unitarity_defect(e.eigenvectors) < 1e-12);
  }
}

TEST_CASE("2x2 nearly degenerate and tiny off-diagonal input") {
  const ComplexMatrix m{{0.5, Complex(1e-17, 3e-17)}, {Complex(1e-17, -3e-17), 0.5}};
  const HermitianEig e = eig_hermitian(m);
  CHECK(max_abs_diff(e.reconstruct(), m) < 1e-15);
  CHECK(unitarity_defect(e.eigenvectors) < 1e-14);

  // Rank one: the small eigenvalue comes out as an exact zero scale.
  const ComplexMatrix p{{0.25, std::sqrt(3.0) / 4}, {std::sqrt(3.0) / 4, 0.75}};
  CHECK(std::abs(eig_hermitian(p).eigenvalues[0]) < 1e-16);
}

TEST_CASE("Jacobi path for d = 3 and d = 4") {
  for (std::size_t d : {3u, 4u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexMatrix m = random_hermitian(d);
      const HermitianEig e = eig_hermitian(m);
      for (std::size_t k = 1; k < d; ++k) REQUIRE(e.eigenvalues[k - 1] <= e.eigenvalues[k]);
      CHECK(max_abs_diff(e.reconstruct(), m) < 1e-12);
      CHECK(unitarity_defect(e.eigenvectors) < 1e-12);
    }
  }
  const HermitianEig e = eig_hermitian(ComplexMatrix::diag({3.0, -1.0, 2.0}));
  CHECK(e.eigenvalues == std::vector<double>{-1.0, 2.0, 3.0});
}

TEST_CASE("mat_sqrt_psd worked examples") {
  CHECK(max_abs_diff(mat_sqrt_psd(ComplexMatrix::diag({4.0, 9.0})), ComplexMatrix::diag({2.0, 3.0})) < 1e-15);
  CHECK(max_abs_diff(mat_sqrt_psd(ComplexMatrix::identity(2)), ComplexMatrix::identity(2)) < 1e-15);
  const ComplexMatrix projector{{0.5, 0.5}, {0.5, 0.5}};
  CHECK(max_abs_diff(mat_sqrt_psd(projector), projector) < 1e-15);
}

TEST_CASE("mat_sqrt_psd squares back for 1000 random PSD matrices") {
  for (std::size_t d : {2u, 3u}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const ComplexMatrix m = random_psd(d);
      const ComplexMatrix r = mat_sqrt_psd(m);
      CHECK(max_abs_diff(r * r, m) < 1e-10);
      CHECK(eig_hermitian(r.hermitian_part()).eigenvalues.front() >= -1e-14);
    }
  }
}

TEST_CASE("mat_sqrt_psd clamps negative dust and rejects negative spectra") {
  CHECK(max_abs_diff(mat_sqrt_psd(ComplexMatrix::diag({1.0, -1e-12})), ComplexMatrix::diag({1.0, 0.0})) < 1e-15);
  try {
    mat_sqrt_psd(ComplexMatrix::diag({1.0, -1e-6}));
    FAIL("expected NotPositiveSemiDefinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveSemiDefinite);
  }
}

TEST_CASE("trace_norm worked examples") {
  CHECK(trace_norm(ComplexMatrix::diag({1.0, -1.0})) == doctest::Approx(2.0));
  CHECK(trace_norm(ComplexMatrix::zeros(2)) == 0.0);
  CHECK(trace_norm(ComplexMatrix::diag({0.25, -0.75})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(trace_norm(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), Error);
}

TEST_CASE("trace_norm is a norm on Hermitian matrices") {
  for (int trial = 0; trial < 1000; ++trial) {
    const ComplexMatrix a = random_hermitian(2), b = random_hermitian(2);
    const double s = aqsl::test::uniform(-3.0, 3.0);
    CHECK(std::abs(trace_norm(s * a) - std::abs(s) * trace_norm(a)) < 1e-12);
    CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-12);
    CHECK(trace_norm(a) >= 0.0);
  }
}

TEST_CASE("pinv_psd inverts the support only") {
  const ComplexMatrix m = ComplexMatrix::diag({0.0, 4.0});
  CHECK(max_abs_diff(pinv_psd(m), ComplexMatrix::diag({0.0, 0.25})) < 1e-15);
  const ComplexMatrix a = random_psd(3) + 0.1 * ComplexMatrix::identity(3);
  CHECK(max_abs_diff(pinv_psd(a) * a, ComplexMatrix::identity(3)) < 1e-10);
}

TEST_CASE("matrix construction checks shape") {
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), Error);
  CHECK_THROWS_AS(ComplexMatrix::identity(2) + ComplexMatrix::identity(3), Error);
}
