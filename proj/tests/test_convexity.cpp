#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hma/catalog.hpp"
#include "hma/convexity.hpp"
#include "hma/errors.hpp"
#include "hma/mollified_max.hpp"

using namespace hma;

namespace {

const Region kBall = Region::ball(origin, 0.9);

}  // namespace

TEST_CASE("catalog convexity verdicts") {
  for (const CatalogEntry& e : catalog()) {
    INFO(e.name);
    const ConvexityReport r = check_psd(e.field, kBall, 400);
    CHECK(r.evaluated > 0);
    CHECK((r.verdict == Verdict::convex) == e.h_convex);
    if (!e.h_convex) CHECK(*r.min_eigenvalue_seen < 0.0);
  }
}

TEST_CASE("segment test works on value-only fields") {
  const auto values_only = [](const std::string& name) {
    const ScalarField f = catalog_entry(name).field;
    return ScalarField::continuous(name + "_values", [f](const Point& p) { return f(p); });
  };
  CHECK(check_group_segments(values_only("bowl"), kBall, 200).verdict == Verdict::convex);
  CHECK(check_group_segments(values_only("r"), kBall, 200).verdict == Verdict::convex);
  CHECK(check_group_segments(values_only("neg_bowl"), kBall, 200).verdict == Verdict::not_convex);
  // t^2 is not H-convex: along X from (0, y, 0), t = 2 y s is linear, but -t^2 is concave.
  CHECK(check_group_segments(values_only("neg_t2"), kBall, 200).verdict == Verdict::not_convex);
}

TEST_CASE("check_psd on a value-only field throws") {
  const ScalarField c = ScalarField::continuous("c", [](const Point& p) { return p.x; });
  CHECK_THROWS_AS(check_psd(c, kBall, 10), NotSmoothError);
}

TEST_CASE("mollified max basic identities") {
  const double h = 0.3;
  const double alpha = alpha_constant().via_polar;
  CHECK(mollified_max(0.7, 0.7, h) == doctest::Approx(0.7 + alpha * h).epsilon(1e-10));
  CHECK(mollified_max(2.0, 0.0, h) == 2.0);
  CHECK(mollified_max(0.0, 2.0, h) == 2.0);
  std::mt19937_64 g(2);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  for (int i = 0; i < 100; ++i) {
    const double a = d(g);
    const double b = d(g);
    CHECK(mollified_max(a, b, h) >= std::max(a, b) - 1e-14);
    CHECK(mollified_max(a, b, h) == doctest::Approx(mollified_max(b, a, h)).epsilon(1e-12));
    // Translation along the diagonal shifts the value.
    CHECK(mollified_max(a + 0.2, b + 0.2, h) == doctest::Approx(mollified_max(a, b, h) + 0.2).epsilon(1e-12));
  }
  CHECK_THROWS_AS(mollified_max(0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("mollified max jet agrees with differences") {
  const double h = 0.3;
  const double e = 1e-4;
  for (const auto& [a, b] : {std::pair{0.1, 0.0}, std::pair{-0.2, 0.05}, std::pair{0.3, 0.3}}) {
    const BivariateJet j = mollified_max_jet(a, b, h);
    const auto f = [h](double x, double y) { return mollified_max(x, y, h); };
    CHECK(j.value == doctest::Approx(f(a, b)));
    CHECK(j.da == doctest::Approx((f(a + e, b) - f(a - e, b)) / (2 * e)).epsilon(1e-7));
    CHECK(j.daa == doctest::Approx((f(a + e, b) - 2 * f(a, b) + f(a - e, b)) / (e * e)).epsilon(1e-5));
    CHECK(j.dab == doctest::Approx(-j.daa).epsilon(1e-12));
    CHECK(j.daa >= 0.0);
  }
}

TEST_CASE("alpha by two routes") {
  const AlphaConstant a = alpha_constant();
  CHECK(a.relative_gap() < 1e-6);
  CHECK(a.via_polar > 0.0);
  CHECK(a.via_polar < 1.0 / std::numbers::sqrt2);
}

TEST_CASE("kernel and marginal") {
  CHECK(bump_kernel(1.0) == 0.0);
  CHECK(bump_kernel(0.0) > bump_kernel(0.5));
  CHECK(bump_marginal(1.0) == 0.0);
  CHECK(bump_marginal(0.3) == doctest::Approx(bump_marginal(-0.3)));
}

TEST_CASE("convex composition keeps H-convexity") {
  const ScalarField glued =
      convex_compose(mollified_max_profile(0.2), catalog_entry("bowl").field, catalog_entry("r").field + 0.05);
  CHECK(glued.is_smooth());
  CHECK(check_psd(glued, kBall, 300).verdict == Verdict::convex);
  const ScalarField rough = ScalarField::continuous("rough", [](const Point& p) { return p.x * p.x; });
  CHECK_FALSE(convex_compose(mollified_max_profile(0.2), rough, catalog_entry("bowl").field).is_smooth());
}

TEST_CASE("Lipschitz bound from the oscillation") {
  const LipschitzReport r = lipschitz_check(catalog_entry("bowl_r_t").field, origin, 0.4, 300);
  CHECK(r.pass);
  CHECK(r.max_ratio <= r.slack * r.bound);
  const ScalarField half = ScalarField::continuous(
      "half_space", [](const Point& p) { return p.x; }, [](const Point& p) { return p.x > 0.0; });
  CHECK_THROWS_AS(lipschitz_check(half, Point{0.5, 0, 0}, 0.4, 10), std::invalid_argument);
}
