#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hma/barriers.hpp"
#include "hma/catalog.hpp"
#include "hma/convexity.hpp"
#include "hma/horizontal.hpp"
#include "hma/measure.hpp"

using namespace hma;

namespace {

constexpr double kPi = std::numbers::pi;
const QuadratureSpec kSpec = QuadratureSpec::from_resolution(32);

double one(const Point&) { return 1.0; }

}  // namespace

TEST_CASE("quadrature settings validation") {
  const Region ball = Region::ball(origin, 1.0);
  CHECK_THROWS_AS(QuadratureSpec::from_resolution(16), std::invalid_argument);
  QuadratureSpec bad = kSpec;
  bad.singular_exclusion = 1.5;
  CHECK_THROWS_AS(integrate(one, ball, bad), std::invalid_argument);
  bad = kSpec;
  bad.singular_exclusion = 0.1;
  CHECK_THROWS_AS(integrate(one, Region::box({-1, -1, -1}, {1, 1, 1}), bad), std::invalid_argument);
  bad = kSpec;
  bad.points_per_cell = 7;
  CHECK_THROWS_AS(integrate(one, ball, bad), std::invalid_argument);
}

TEST_CASE("ball volumes and moments") {
  // |B_R| = R^4 pi^2 / 2, \int_{B_1} (x^2 + y^2) = 2 pi / 3.
  for (double R : {0.5, 1.0, 2.0}) {
    const MeasureEstimate v = integrate(one, Region::ball(Point{0.3, -0.2, 0.1}, R), kSpec);
    CHECK(v.value == doctest::Approx(std::pow(R, 4) * kPi * kPi / 2.0).epsilon(1e-10));
  }
  const MeasureEstimate q =
      integrate([](const Point& p) { return p.x * p.x + p.y * p.y; }, Region::ball(origin, 1.0), kSpec);
  CHECK(std::abs(q.value - 2.0 * kPi / 3.0) <= q.error_indicator);
  const MeasureEstimate box = integrate([](const Point& p) { return p.x * p.x * p.t * p.t; },
                                        Region::box({0, 0, 0}, {1, 2, 3}), kSpec);
  CHECK(box.value == doctest::Approx(1.0 / 3.0 * 2.0 * 9.0).epsilon(1e-12));
  // Annulus = difference of balls.
  const MeasureEstimate ring = integrate(one, Region::annulus(origin, 0.5, 1.0), kSpec);
  CHECK(ring.value == doctest::Approx((1.0 - 0.0625) * kPi * kPi / 2.0).epsilon(1e-10));
}

TEST_CASE("bounding box midpoint rule agrees roughly") {
  const MeasureEstimate m = integrate_bounding_box(one, Region::ball(origin, 1.0), 64);
  CHECK(m.value == doctest::Approx(kPi * kPi / 2.0).epsilon(2e-2));
}

TEST_CASE("H-measures with closed forms") {
  const Region ball = Region::ball(origin, 1.0);
  // bowl: det H = 4, u_t = 0.
  CHECK(h_measure(catalog_entry("bowl").field, ball, kSpec).value == doctest::Approx(2.0 * kPi * kPi));
  CHECK(trace_integral(catalog_entry("bowl").field, ball, kSpec).value == doctest::Approx(2.0 * kPi * kPi));
  // r: trace H = 24 (x^2 + y^2), so \int trace = 16 pi.
  CHECK(trace_integral(catalog_entry("r").field, ball, kSpec).value == doctest::Approx(16.0 * kPi));
  // r: det H + 12 r_t^2 = 48 (3 q^2 + t^2) with \int (3 q^2 + t^2) = pi^2 / 2.
  CHECK(h_measure(catalog_entry("r").field, ball, kSpec).value == doctest::Approx(24.0 * kPi * kPi));
}

TEST_CASE("weighted measure with unit weight is the measure") {
  const Region ball = Region::ball(origin, 0.7);
  const ScalarField u = catalog_entry("exp_r").field;
  CHECK(weighted_h_measure(u, one, ball, kSpec).value == doctest::Approx(h_measure(u, ball, kSpec).value));
}

TEST_CASE("constants by two routes") {
  const ConstantEstimate vol = unit_ball_volume(kSpec);
  CHECK(vol.cylindrical == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-12));
  CHECK(vol.relative_gap() < 1e-10);
  const ConstantEstimate c1 = cone_constant(kSpec);
  CHECK(c1.cylindrical == doctest::Approx(1.5 * kPi * kPi).epsilon(1e-10));
  CHECK(c1.relative_gap() < 1e-6);
}

TEST_CASE("excised cone measure") {
  // The cone density is homogeneous of degree -2, so B_1 minus B_eps carries c1 (1 - eps^2).
  const double c1 = 1.5 * kPi * kPi;
  for (double eps : {0.1, 0.3}) {
    const MeasureEstimate m =
        h_measure(gauge_field(), Region::ball(origin, 1.0), QuadratureSpec::from_resolution(32, eps));
    CHECK(m.value == doctest::Approx(c1 * (1.0 - eps * eps)).epsilon(1e-6));
  }
}

TEST_CASE("kernel rule") {
  const KernelRule rule = group_kernel_rule(0.1, 6);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    total += rule.weights[i];
    CHECK(gauge(rule.nodes[i]) < 0.1);
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK_THROWS_AS(group_kernel_rule(0.1, 5), std::invalid_argument);
  CHECK_THROWS_AS(group_kernel_rule(-0.1, 6), std::invalid_argument);
}

TEST_CASE("mollification preserves H-convexity and converges") {
  const ScalarField u = catalog_entry("exp_r").field;
  const ScalarField m = mollify(u, 0.05, 6);
  const Point p{0.2, 0.1, -0.3};
  CHECK(m(p) == doctest::Approx(u(p)).epsilon(1e-2));
  CHECK(check_psd(m, Region::ball(origin, 0.5), 100).verdict == Verdict::convex);
  const ScalarField values = ScalarField::continuous("exp_r_values", [u](const Point& q) { return u(q); });
  const ScalarField mv = mollify(values, 0.05, 6);
  CHECK(mv.is_smooth());
  // Central differences in the left-invariant frame cost O((h / 4)^2).
  CHECK(ma_density(mv, p) == doctest::Approx(ma_density(m, p)).epsilon(1e-3));
}

TEST_CASE("continuous measure matches the direct one") {
  const ScalarField u = catalog_entry("bowl_r_t").field;
  const Region ball = Region::ball(origin, 0.5);
  const MeasureEstimate direct = h_measure(u, ball, kSpec);
  const MeasureEstimate smoothed = h_measure_continuous(u, ball, {0.1, 0.05}, kSpec, 4);
  CHECK(std::abs(smoothed.value - direct.value) <= smoothed.error_indicator + direct.error_indicator);
  CHECK_THROWS_AS(h_measure_continuous(u, ball, {0.05}, kSpec), std::invalid_argument);
  CHECK_THROWS_AS(h_measure_continuous(u, ball, {0.05, 0.1}, kSpec), std::invalid_argument);
  const ScalarField half = ScalarField::continuous(
      "half_space", [](const Point& p) { return p.x * p.x; }, [](const Point& p) { return p.x > 0.0; });
  CHECK_THROWS_AS(h_measure_continuous(half, Region::ball(Point{0.3, 0, 0}, 0.25), {0.1, 0.05}, kSpec),
                  std::invalid_argument);
}

TEST_CASE("weak convergence of mollifications") {
  const ScalarField u = catalog_entry("r").field;
  const Region support = Region::ball(origin, 0.5);
  const Density test = [](const Point& p) { return std::max(0.0, 1.0 - gauge4(p) / 0.0625); };
  std::vector<ScalarField> seq;
  for (double h : {0.2, 0.1, 0.05}) seq.push_back(mollify(u, h, 4));
  const WeakConvergenceReport r = weak_convergence_test(seq, u, test, support, kSpec, 1e-2);
  CHECK(r.monotone);
  CHECK(r.pass);
  CHECK(r.gaps.size() == 3);
}
