#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hma/barriers.hpp"
#include "hma/catalog.hpp"
#include "hma/convexity.hpp"
#include "hma/horizontal.hpp"

using namespace hma;

TEST_CASE("gauge field") {
  const ScalarField g = gauge_field();
  CHECK(g(Point{0, 0, 4}) == doctest::Approx(2.0));
  CHECK(g(Point{0.5, 0, 0}) == doctest::Approx(0.5));
}

TEST_CASE("cone vanishes on the sphere and equals -m at the vertex") {
  const Point c{0.2, -0.1, 0.3};
  const ScalarField cone = gauge_cone(c, 0.8, 1.5);
  CHECK(cone(c) == doctest::Approx(-1.5));
  for (const Point& p : sphere_samples(c, 0.8, 5, 8)) CHECK(std::abs(cone(p)) < 1e-12);
  CHECK(check_psd(cone, Region::ball(c, 0.8), 300).verdict == Verdict::convex);
  CHECK_THROWS_AS(gauge_cone(c, 0.8, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauge_cone(c, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("quartic barrier levels") {
  const double R = 1.3;
  const double sigma = 0.5;
  const double m0 = -2.0;
  const ScalarField w = quartic_barrier(R, sigma, m0);
  for (const Point& p : sphere_samples(origin, R, 5, 8)) CHECK(std::abs(w(p)) < 1e-12);
  // w = m0 on the inner sphere of radius sigma R.
  for (const Point& p : sphere_samples(origin, sigma * R, 5, 8)) CHECK(w(p) == doctest::Approx(m0));
  CHECK(w(origin) == doctest::Approx(m0 / (1.0 - std::pow(sigma, 4))));
  CHECK(check_psd(w, Region::ball(origin, R), 300).verdict == Verdict::convex);
  CHECK_THROWS_AS(quartic_barrier(R, 1.0, m0), std::invalid_argument);
  CHECK_THROWS_AS(quartic_barrier(R, sigma, 0.5), std::invalid_argument);
}

TEST_CASE("exponential barrier has negative Kohn Laplacian") {
  const double lambda = 2.0;
  const ScalarField w = exp_barrier(lambda, 10.0);
  const Point p{0.3, -0.4, 0.1};
  CHECK(w(p) == doctest::Approx(10.0 - std::exp(lambda * p.x) - std::exp(lambda * p.y)));
  const double expected = -lambda * lambda * (std::exp(lambda * p.x) + std::exp(lambda * p.y));
  CHECK(kohn_laplacian(w, p) == doctest::Approx(expected));
}

TEST_CASE("epsilon perturbation adds a bowl") {
  const ScalarField u = catalog_entry("neg_t2").field;
  const ScalarField v = epsilon_perturb(u, 0.25);
  const Point p{0.3, 0.2, 0.5};
  CHECK(v(p) == doctest::Approx(u(p) + 0.25 * (0.09 + 0.04)));
  const HorizontalHessian a = horizontal_hessian(u, p);
  const HorizontalHessian b = horizontal_hessian(v, p);
  CHECK(b.h11 - a.h11 == doctest::Approx(0.5));
  CHECK(b.h22 - a.h22 == doctest::Approx(0.5));
}
