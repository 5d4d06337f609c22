#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hma/barriers.hpp"
#include "hma/catalog.hpp"
#include "hma/principles.hpp"
#include "hma/suites.hpp"

using namespace hma;

namespace {

constexpr double kPi = std::numbers::pi;
const QuadratureSpec kSpec = QuadratureSpec::from_resolution(32);
const Region kBall = Region::ball(origin, 1.0);

SampleConfig light() {
  SampleConfig s;
  s.interior = 300;
  s.boundary_levels = 9;
  s.boundary_angles = 16;
  return s;
}

ScalarField well() { return (catalog_entry("r").field - 1.0).renamed("r-1"); }

const NamedCheck& check_named(const VerificationReport& r, const std::string& name) {
  for (const NamedCheck& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("integral comparison equality case has zero margin") {
  const ScalarField u = catalog_entry("exp_r").field;
  const VerificationReport r = verify_integral_comparison(u, u, kBall, kSpec, light());
  CHECK(r.passed());
  CHECK(r.margin == 0.0);
  CHECK(r.checks.size() == 5);
}

TEST_CASE("integral comparison detects swapped roles") {
  const ScalarField u = 4.0 * catalog_entry("bowl").field;
  const ScalarField v = u + 0.5 * well();
  CHECK(verify_integral_comparison(u, v, kBall, kSpec, light()).passed());
  const VerificationReport r = verify_integral_comparison(v, u, kBall, kSpec, light());
  CHECK(r.status == Status::hypothesis_failed);
  CHECK(r.failed_check == "v_below_u");
}

TEST_CASE("weak maximum") {
  const CoefficientField id = [](const Point&) { return HorizontalHessian{1, 0, 1}; };
  const ScalarField lifted = catalog_entry("bowl").field - 1.0;
  const VerificationReport ok = verify_weak_maximum(id, lifted, kBall, light());
  CHECK(ok.passed());
  CHECK(ok.lhs <= 0.0);
  const VerificationReport bad = verify_weak_maximum(id, exp_barrier(1.0, 2.0 * std::exp(-1.0)), kBall, light());
  CHECK(bad.failed_check == "Lw_nonneg");
  const CoefficientField indefinite = [](const Point&) { return HorizontalHessian{1, 2, 1}; };
  CHECK(verify_weak_maximum(indefinite, lifted, kBall, light()).failed_check == "coefficients_psd");
}

TEST_CASE("pointwise comparison names the determinant hypothesis") {
  const ScalarField b = catalog_entry("bowl").field;
  const VerificationReport r = verify_pointwise_comparison(b - 1.0, 2.0 * b - 1.0, kBall, light());
  CHECK(r.status == Status::hypothesis_failed);
  CHECK(r.failed_check == "det_dominance");
  CHECK(verify_pointwise_comparison(2.0 * well(), well(), kBall, light()).passed());
}

TEST_CASE("perforated comparison matches c1 m^2") {
  const VerificationReport r = verify_perforated_comparison(well(), kBall, kSpec, {0.2, 0.1, 0.05}, light());
  CHECK(r.passed());
  // m = 1: the cone carries c1 = 3 pi^2 / 2.
  CHECK(r.lhs == doctest::Approx(1.5 * kPi * kPi).epsilon(1e-6));
  CHECK(r.rhs == doctest::Approx(24.0 * kPi * kPi).epsilon(1e-4));
  CHECK(check_named(r, "cone_matches_c1").passed);
  CHECK_THROWS_AS(verify_perforated_comparison(well(), kBall, kSpec, {0.1, 0.2}, light()), std::invalid_argument);
  CHECK_THROWS_AS(verify_perforated_comparison(well(), Region::box({-1, -1, -1}, {1, 1, 1}), kSpec, {0.1}, light()),
                  std::invalid_argument);
  const VerificationReport lifted = verify_perforated_comparison(well() + 0.5, kBall, kSpec, {0.2, 0.1}, light());
  CHECK(lifted.failed_check == "boundary_zero");
}

TEST_CASE("chain inequalities and ABP") {
  const ChainReport chain = build_chain(Point{0.05, -0.1, 0.7}, 1.0);
  CHECK(verify_chain_inequalities(well(), chain, light()).passed());
  CHECK(verify_chain_inequalities(constant_field(0.0), chain, light()).passed());
  CHECK(verify_chain_inequalities(well() + 0.3, chain, light()).failed_check == "boundary_zero");
  const VerificationReport abp = verify_abp(well(), 1.0, kSpec, light());
  CHECK(abp.passed());
  CHECK(check_named(abp, "abp_sharp").passed);
  const VerificationReport zero = verify_abp(constant_field(0.0), 1.0, kSpec, light());
  CHECK(zero.passed());
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
}

TEST_CASE("nonpositivity") {
  CHECK(verify_nonpositivity((gauge_field() - 1.0).renamed("cone"), kBall, light()).passed());
  CHECK(verify_nonpositivity(catalog_entry("neg_bowl").field, kBall, light()).failed_check == "h_convex");
}

TEST_CASE("measure comparison family and broken ordering") {
  const auto family = measure_comparison_family(origin, 1.0);
  REQUIRE(family.size() == 7);
  for (const Region& b : family) {
    for (const Point& p : b.boundary_samples(5, 8)) CHECK(gauge(p) < 1.0);
  }
  const ScalarField w = catalog_entry("bowl").field + 1.0;
  const VerificationReport r = verify_measure_comparison(1.2 * w, w, kBall, kSpec, {0.1, 0.05}, light());
  CHECK(r.failed_check == "boundary_order");
  CHECK(verify_measure_comparison(2.0 * well(), well(), kBall, kSpec, {0.1, 0.05}, light()).passed());
}

TEST_CASE("oscillation constants have closed forms") {
  const OscillationConstants c = oscillation_constants(1.0, 0.5, kSpec);
  // 48 (pi^2 / 2) / (1 - sigma^4)^2 and 16 pi / (1 - sigma^4).
  const double s4 = 1.0 - 0.0625;
  CHECK(c.measure_constant.value == doctest::Approx(24.0 * kPi * kPi / (s4 * s4)).epsilon(1e-4));
  CHECK(c.trace_constant.value == doctest::Approx(16.0 * kPi / s4).epsilon(1e-4));
  const VerificationReport r = verify_oscillation(catalog_entry("exp_r").field, origin, c, kSpec, light());
  CHECK(r.passed());
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 9);
  CHECK(is_suite_name("abp"));
  CHECK_FALSE(is_suite_name("all"));
  CHECK_THROWS_AS(suite_cases("nope", {}), std::invalid_argument);
  SuiteOptions o;
  o.resolution = 32;
  for (const std::string& n : suite_names()) {
    CHECK(suite_cases(n, o).size() >= 5);
    o.broken = true;
    CHECK(suite_cases(n, o).size() >= 1);
    o.broken = false;
  }
  VerificationReport pass;
  VerificationReport hyp;
  hyp.status = Status::hypothesis_failed;
  VerificationReport con;
  con.status = Status::conclusion_failed;
  CHECK(exit_code({pass, pass}) == 0);
  CHECK(exit_code({pass, hyp}) == 2);
  CHECK(exit_code({hyp, con}) == 3);
}

TEST_CASE("suite run is ordered by case index") {
  SuiteOptions o;
  o.resolution = 32;
  const SuiteRun run = run_suite("chain-ineq", o);
  const auto cases = suite_cases("chain-ineq", o);
  REQUIRE(run.labels.size() == cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) CHECK(run.labels[i] == cases[i].label);
  CHECK(exit_code(run.reports) == 0);
}
