#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "aqsl/channels.hpp"
#include "aqsl/error.hpp"
#include "support.hpp"

using namespace aqsl;
using aqsl::test::random_qubit;
using aqsl::test::uniform;

namespace {
constexpr double kPi = std::numbers::pi;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::ConfigError;
}
}  // namespace

TEST_CASE("GadcParams derived quantities") {
  const GadcParams params(0.5);
  CHECK(params.c() == doctest::Approx(0.731059).epsilon(1e-6));
  CHECK(params.c() == doctest::Approx(0.5 * (1 + std::tanh(0.5))).epsilon(1e-15));
  CHECK(params.c() + params.one_minus_c() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(0.5 * std::log(params.emission_rate() / params.absorption_rate()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(params.emission_rate() + params.absorption_rate() == doctest::Approx(1.0));
  CHECK(code_of([] { GadcParams(std::nan("")); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { GadcParams(1000.0); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { GadcParams(0.5, 0.0); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("Kraus completeness on a 50 x 50 grid") {
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double p = i / 49.0;
      const double c = (j + 0.5) / 50.0;
      const KrausSet k = gadc_kraus(p, c);
      ComplexMatrix sum(2);
      for (const auto& m : k) sum += m.adjoint() * m;
      CHECK(max_abs_diff(sum, ComplexMatrix::identity(2)) < 1e-12);
    }
  }
  CHECK(code_of([] { gadc_kraus(1.5, 0.5); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { gadc_kraus(0.5, 1.0); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("GADC examples") {
  const GadcParams params(0.5);
  const DensityMatrix rho = random_qubit();
  SUBCASE("p = 0 is the identity map") {
    CHECK(max_abs_diff(gadc_state(rho, 0.0, params).matrix(), rho.matrix()) < 1e-15);
  }
  SUBCASE("p = 1 outputs the thermal state") {
    const ComplexMatrix expected = ComplexMatrix::diag({params.one_minus_c(), params.c()});
    CHECK(max_abs_diff(gadc_state(rho, 1.0, params).matrix(), expected) < 1e-15);
    CHECK(max_abs_diff(gadc_state(pure_state_theta(0.0), 1.0, params).matrix(), expected) < 1e-15);
  }
  SUBCASE("coherence decays as sqrt(1 - p)") {
    for (int trial = 0; trial < 200; ++trial) {
      const DensityMatrix r = random_qubit();
      const double p = uniform();
      const Complex out = gadc_state(r, p, params).matrix()(0, 1);
      CHECK(std::abs(out - std::sqrt(1 - p) * r.matrix()(0, 1)) < 1e-12);
    }
  }
  SUBCASE("identity Kraus set leaves the state alone") {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(apply_channel(rho, std::span(&id, 1)).matrix(), rho.matrix()) < 1e-15);
  }
  SUBCASE("incomplete Kraus sets are rejected") {
    const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
    CHECK(code_of([&] { apply_channel(rho, std::span(&half, 1)); }) == ErrorCode::IncompleteKrausSet);
  }
}

TEST_CASE("GADC path geometry") {
  const GadcParams params(0.5);
  const RampProfile ramp = RampProfile::uniform(200);
  SUBCASE("theta = 0 stays on the z axis") {
    const DiscretizedPath path = gadc_path(pure_state_theta(0.0), ramp, params);
    for (const auto& s : path.states()) {
      const BlochVector r = to_bloch(s);
      CHECK(std::hypot(r.x, r.y) < 1e-15);
    }
    CHECK(to_bloch(path.front()).z == doctest::Approx(1.0));
    CHECK(to_bloch(path.back()).z == doctest::Approx(-std::tanh(0.5)).epsilon(1e-14));
  }
  SUBCASE("theta = pi/3 ends at the steady state") {
    const BlochVector r = to_bloch(gadc_path(pure_state_theta(kPi / 3), ramp, params).back());
    CHECK(r.z == doctest::Approx(-0.462117).epsilon(1e-6));
    CHECK(std::abs(r.x) < 1e-15);
    CHECK(std::abs(r.y) < 1e-15);
  }
  SUBCASE("visited states depend only on the p values") {
    const RampProfile slow = RampProfile::from_function(200, 3.0, [](double s) { return s; });
    const DiscretizedPath a = gadc_path(pure_state_theta(1.0), ramp, params);
    const DiscretizedPath b = gadc_path(pure_state_theta(1.0), slow, params);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(max_abs_diff(a.states()[i].matrix(), b.states()[i].matrix()) == 0.0);
  }
}

TEST_CASE("steady state") {
  CHECK(max_abs_diff(steady_state(GadcParams(0.0)).matrix(), ComplexMatrix::diag({0.5, 0.5})) < 1e-15);
  const ComplexMatrix s = steady_state(GadcParams(0.5)).matrix();
  CHECK(s(0, 0).real() == doctest::Approx(0.268941).epsilon(1e-6));
  CHECK(s(1, 1).real() == doctest::Approx(0.731059).epsilon(1e-6));
  CHECK(steady_state(GadcParams(15.0)).matrix()(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));

  const GadcParams params(0.5);
  for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    CHECK(max_abs_diff(gadc_state(steady_state(params), p, params).matrix(), s) < 1e-12);
  }
  CHECK(lindblad_rhs(steady_state(params), params).max_abs() < 1e-16);
}

TEST_CASE("Lindblad generator") {
  const GadcParams params(0.5);
  SUBCASE("excited population flows out at rate gamma") {
    const ComplexMatrix d = lindblad_rhs(pure_state_theta(0.0), params);
    CHECK(d(0, 0).real() == doctest::Approx(-params.emission_rate()).epsilon(1e-15));
    CHECK(d(1, 1).real() == doctest::Approx(params.emission_rate()).epsilon(1e-15));
  }
  SUBCASE("traceless and Hermitian") {
    for (int trial = 0; trial < 200; ++trial) {
      const ComplexMatrix d = lindblad_rhs(random_qubit(), params);
      CHECK(std::abs(d.trace()) < 1e-15);
      CHECK(d.hermiticity_defect() < 1e-15);
    }
  }
}

TEST_CASE("RK4 propagation") {
  const GadcParams params(0.5);
  const DensityMatrix rho0 = pure_state_theta(kPi / 3);
  SUBCASE("t_final = 0 returns the start state") {
    const DiscretizedPath path = lindblad_propagate(rho0, 0.0, 0, params);
    REQUIRE(path.size() == 1);
    CHECK(max_abs_diff(path.front().matrix(), rho0.matrix()) == 0.0);
  }
  SUBCASE("step-count floor") {
    CHECK(code_of([&] { lindblad_propagate(rho0, 2.0, 199, params); }) == ErrorCode::StepSizeTooCoarse);
    CHECK_NOTHROW(lindblad_propagate(rho0, 2.0, 200, params));
  }
  SUBCASE("Kraus and Lindblad forms agree on p = 1 - exp(-t)") {
    const double t_final = 5.0;
    const DiscretizedPath lind = lindblad_propagate(rho0, t_final, 2000, params);
    double worst = 0.0;
    for (std::size_t i = 0; i < lind.size(); i += 10) {
      const double p = -std::expm1(-lind.times()[i]);
      worst = std::max(worst, dist_td(lind.states()[i], gadc_state(rho0, p, params)));
    }
    CHECK(worst < 1e-8);
  }
  SUBCASE("relaxes to the steady state by t = 20") {
    // Populations relax as exp(-t), coherences only as exp(-t/2).
    const DiscretizedPath diag = lindblad_propagate(pure_state_theta(0.0), 20.0, 2000, params);
    CHECK(dist_td(diag.back(), steady_state(params)) < 1e-6);
    const DiscretizedPath lind = lindblad_propagate(rho0, 20.0, 2000, params);
    const double coherence = 2.0 * std::abs(rho0.matrix()(0, 1)) * std::exp(-10.0);
    CHECK(dist_td(lind.back(), steady_state(params)) == doctest::Approx(coherence).epsilon(1e-6));
  }
}

TEST_CASE("ramp profiles") {
  SUBCASE("uniform and exponential clock endpoints") {
    const RampProfile u = RampProfile::uniform(10, 2.0);
    CHECK(u.size() == 11);
    CHECK(u.tau() == 2.0);
    for (double r : u.rates()) CHECK(r == doctest::Approx(0.5));
    const RampProfile e = RampProfile::exponential_clock(100, 1.0, 12.0);
    CHECK(e.p_values().front() == 0.0);
    CHECK(e.p_values().back() == 1.0);
    CHECK(e.p_values()[50] == doctest::Approx(-std::expm1(-6.0) / -std::expm1(-12.0)).epsilon(1e-14));
  }
  SUBCASE("validation") {
    CHECK(code_of([] { RampProfile({0.0, 1.0}, {0.0, 0.9}); }) == ErrorCode::RampInvalid);
    CHECK(code_of([] { RampProfile({0.0, 1.0, 2.0}, {0.0, 0.6, 0.5}); }) == ErrorCode::RampInvalid);
    CHECK(code_of([] { RampProfile({0.0, 1.0, 1.0}, {0.0, 0.5, 1.0}); }) == ErrorCode::RampInvalid);
    CHECK(code_of([] { RampProfile({0.1, 1.0}, {0.0, 1.0}); }) == ErrorCode::RampInvalid);
    // Round-off inside the tolerances is accepted and snapped.
    const RampProfile r({0.0, 0.5, 1.0}, {1e-13, 0.5, 1.0 - 1e-13});
    CHECK(r.p_values().front() == 0.0);
    CHECK(r.p_values().back() == 1.0);
    CHECK_NOTHROW(RampProfile({0.0, 0.5, 0.6, 1.0}, {0.0, 0.5, 0.5 - 1e-15, 1.0}));
  }
}
