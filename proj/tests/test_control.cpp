#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aqsl/channels.hpp"
#include "aqsl/control.hpp"
#include "aqsl/error.hpp"
#include "aqsl/geodesics.hpp"
#include "aqsl/qsl.hpp"
#include "support.hpp"

using namespace aqsl;

namespace {
constexpr double kPi = std::numbers::pi;

double relative_speed_spread(const DiscretizedPath& path, MetricKind m) {
  const std::vector<double> d = segment_distances(path, m);
  double lo = 1e300, hi = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double v = d[i] / (path.times()[i + 1] - path.times()[i]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return (hi - lo) / hi;
}

void check_admissible(const RampProfile& ramp) {
  double mass = 0.0;
  const std::vector<double> r = ramp.rates();
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(r[i] >= 0.0);
    mass += r[i] * (ramp.times()[i + 1] - ramp.times()[i]);
  }
  CHECK(std::abs(mass - 1.0) < 1e-12);
}
}  // namespace

TEST_CASE("arc-length table") {
  const PathGenerator gen = gadc_generator(pure_state_theta(kPi / 3), GadcParams(0.5));
  for (MetricKind m : kAllMetrics) {
    const ArcLengthTable table(gen, m, 8000);
    const double fine = path_length(sample_path(gen, RampProfile::uniform(20000)), m);
    CHECK(table.total() == doctest::Approx(fine).epsilon(1e-6));
    CHECK(table.length_at(0.0) == 0.0);
    CHECK(table.length_at(1.0) == doctest::Approx(table.total()).epsilon(1e-14));
    for (double p : {1e-6, 0.01, 0.3, 0.77, 0.999}) {
      CHECK(table.inverse(table.length_at(p)) == doctest::Approx(p).epsilon(1e-9));
      CHECK(table.slope_at(p) > 0.0);
    }
  }
}

TEST_CASE("arc-length reparametrization") {
  const GadcParams params(0.5);
  SUBCASE("constant-speed geodesic is a fixed point") {
    const PathGenerator gen = td_geodesic_generator(pure_state_theta(1.0), steady_state(params));
    const RampProfile ramp = arc_length_reparametrize(gen, MetricKind::TD, 1.0, 2000);
    for (std::size_t i = 0; i < ramp.size(); ++i) CHECK(std::abs(ramp.p_values()[i] - ramp.times()[i]) < 1e-8);
  }
  SUBCASE("GADC paths come out at constant speed") {
    for (double theta : {0.3, kPi / 3, kPi / 2, 2.5}) {
      const PathGenerator gen = gadc_generator(pure_state_theta(theta), params);
      for (MetricKind m : kAllMetrics) {
        const RampProfile ramp = arc_length_reparametrize(gen, m, 1.0, 2000);
        CHECK(relative_speed_spread(sample_path(gen, ramp), m) < 1e-4);
      }
    }
  }
  SUBCASE("theta = pi/2") {
    const PathGenerator gen = gadc_generator(pure_state_theta(kPi / 2), params);
    // The path is a diagonal segment and TD is linear in p along it: the optimum is the uniform ramp.
    for (double r : arc_length_reparametrize(gen, MetricKind::TD, 1.0, 1000).rates()) CHECK(std::abs(r - 1.0) < 1e-8);
    // Bures speed per unit p falls monotonically from the pure start, so the optimal dp/dt keeps rising.
    const std::vector<double> r = arc_length_reparametrize(gen, MetricKind::QFI, 1.0, 1000).rates();
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] >= r[i - 1] * (1 - 1e-6));
    CHECK(r.back() > 10.0 * r.front());
  }
  SUBCASE("errors") {
    const PathGenerator still = gadc_generator(steady_state(params), params);
    CHECK_THROWS_AS(arc_length_reparametrize(still, MetricKind::QFI, 1.0, 200), Error);
    const PathGenerator gen = gadc_generator(pure_state_theta(1.0), params);
    CHECK_THROWS_AS(arc_length_reparametrize(gen, MetricKind::QFI, 1.0, 99), Error);
  }
}

TEST_CASE("projected gradient optimizer") {
  const GadcParams params(0.5);
  const PathGenerator gen = gadc_generator(pure_state_theta(kPi / 3), params);

  SUBCASE("uniform start reaches the analytic optimum") {
    for (MetricKind m : kAllMetrics) {
      const OptimizeResult result = optimize_ramp(gen, m, RampProfile::uniform(2000));
      const double ell = path_length(sample_path(gen, arc_length_reparametrize(gen, m, 1.0, 2000)), m);
      const double action = path_action(sample_path(gen, result.ramp), m);
      CHECK(std::abs(action - ell * ell) / (ell * ell) < 1e-4);
      for (std::size_t i = 1; i < result.history.size(); ++i) CHECK(result.history[i] <= result.history[i - 1]);
      CHECK(result.history.back() <= result.history.front());
      check_admissible(result.ramp);
    }
  }
  SUBCASE("starting at the optimum stops at once") {
    for (MetricKind m : kAllMetrics) {
      const RampProfile optimum = arc_length_reparametrize(gen, m, 1.0, 1000);
      const OptimizeResult result = optimize_ramp(gen, m, optimum);
      CHECK(result.iterations <= 2);
      CHECK(result.history.back() >= result.history.front() * (1 - 1e-9));
    }
  }
  SUBCASE("the optimum does not depend on the initial guess") {
    const double a = optimize_ramp(gen, MetricKind::WY, RampProfile::uniform(800)).history.back();
    const double b = optimize_ramp(gen, MetricKind::WY, RampProfile::exponential_clock(800)).history.back();
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
  }
  SUBCASE("iteration cap raises NonConvergence with the history") {
    OptimizeOptions options;
    options.max_iterations = 3;
    try {
      optimize_ramp(gen, MetricKind::TD, RampProfile::uniform(500), options);
      FAIL("expected NonConvergence");
    } catch (const NonConvergenceError& e) {
      CHECK(e.code() == ErrorCode::NonConvergence);
      CHECK(e.history().size() == 4);
    }
  }
  SUBCASE("inadmissible initial ramps") {
    try {
      optimize_ramp(gen, MetricKind::TD, RampProfile::uniform(1));
      FAIL("expected InadmissibleInitial");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InadmissibleInitial);
    }
  }
}
