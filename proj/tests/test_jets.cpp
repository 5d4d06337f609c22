#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hma/barriers.hpp"
#include "hma/catalog.hpp"
#include "hma/field.hpp"
#include "hma/horizontal.hpp"
#include "hma/region.hpp"
#include "oracles.hpp"

using namespace hma;

namespace {

const Point kProbe{0.31, -0.22, 0.17};

}  // namespace

TEST_CASE("elementary jets match hand derivatives") {
  const JetPoint v = seed(kProbe);
  const Jet2 e = exp(v.x * v.y);
  const double xy = kProbe.x * kProbe.y;
  CHECK(e.value == doctest::Approx(std::exp(xy)));
  CHECK(e.u_x() == doctest::Approx(kProbe.y * std::exp(xy)));
  CHECK(e.u_xy() == doctest::Approx((1.0 + xy) * std::exp(xy)));
  CHECK(e.u_xx() == doctest::Approx(kProbe.y * kProbe.y * std::exp(xy)));
  CHECK(e.u_t() == 0.0);

  const Jet2 s = sqrt(1.0 + v.t * v.t);
  const double w = 1.0 + kProbe.t * kProbe.t;
  CHECK(s.u_tt() == doctest::Approx(1.0 / std::pow(w, 1.5)));

  const Jet2 q = v.x / v.y;
  CHECK(q.u_yy() == doctest::Approx(2.0 * kProbe.x / std::pow(kProbe.y, 3)));
  const Jet2 l = log(v.x * v.x + 1.0);
  CHECK(l.u_xx() ==
        doctest::Approx((2.0 * (1.0 + kProbe.x * kProbe.x) - 4.0 * kProbe.x * kProbe.x) /
                        std::pow(1.0 + kProbe.x * kProbe.x, 2)));
  const Jet2 c = sin(v.x) * cos(v.y);
  CHECK(c.u_xy() == doctest::Approx(std::sin(kProbe.y) * -std::cos(kProbe.x)));
  const Jet2 p = pow(v.x, 3.0);
  CHECK(p.u_xx() == doctest::Approx(6.0 * kProbe.x));
}

TEST_CASE("horizontal derivatives of coordinates") {
  // X t = 2y, Y t = -2x, XY t = -2, YX t = 2.
  const HorizontalJet h = horizontal_jet(coordinate_t(), kProbe);
  CHECK(h.xu == doctest::Approx(2.0 * kProbe.y));
  CHECK(h.yu == doctest::Approx(-2.0 * kProbe.x));
  CHECK(h.xyu == doctest::Approx(-2.0));
  CHECK(h.yxu == doctest::Approx(2.0));
  const HorizontalHessian b = horizontal_hessian(catalog_entry("bowl").field, kProbe);
  CHECK(b.h11 == doctest::Approx(2.0));
  CHECK(b.h12 == doctest::Approx(0.0));
  CHECK(b.h22 == doctest::Approx(2.0));
}

TEST_CASE("commutator XY - YX = -4 d_t") {
  for (const CatalogEntry& e : catalog()) {
    if (e.singular) continue;
    const HorizontalJet h = horizontal_jet(e.field, kProbe);
    CHECK(h.xyu - h.yxu == doctest::Approx(-4.0 * h.ut).epsilon(1e-12));
  }
}

TEST_CASE("analytic horizontal jets agree with flow differences") {
  const auto points = interior_samples(Region::ball(origin, 0.9), 40, 99);
  for (const CatalogEntry& e : catalog()) {
    if (e.singular) continue;
    for (const Point& p : points) {
      const HorizontalJet h = horizontal_jet(e.field, p);
      const oracle::Horizontal fd = oracle::horizontal_fd(e.field, p);
      INFO(e.name);
      CHECK(oracle::relative_error(h.xxu, fd.xx) < 1e-5);
      CHECK(oracle::relative_error(h.yyu, fd.yy) < 1e-5);
      CHECK(oracle::relative_error(h.xyu, fd.xy) < 1e-5);
      CHECK(oracle::relative_error(h.yxu, fd.yx) < 1e-5);
      CHECK(oracle::relative_error(h.ut, fd.t) < 1e-6);
    }
  }
}

TEST_CASE("left translation pulls back jets") {
  const Point eta{0.4, 0.1, -0.3};
  const ScalarField u = catalog_entry("exp_r").field;
  const ScalarField moved = u.left_translate(eta);
  const Jet2 direct = moved.jet(kProbe);
  const Jet2 pulled = pullback_left_translation(u.jet(compose(eta, kProbe)), eta);
  CHECK(moved(kProbe) == doctest::Approx(u(compose(eta, kProbe))));
  for (std::size_t i = 0; i < 6; ++i) CHECK(direct.hess[i] == doctest::Approx(pulled.hess[i]));
  // The horizontal Hessian is left invariant.
  const HorizontalHessian a = horizontal_hessian(moved, kProbe);
  const HorizontalHessian b = horizontal_hessian(u, compose(eta, kProbe));
  CHECK(a.h11 == doctest::Approx(b.h11));
  CHECK(a.h12 == doctest::Approx(b.h12));
  CHECK(a.h22 == doctest::Approx(b.h22));
}

TEST_CASE("Monge-Ampere density of simple fields") {
  // bowl + t: H = 2I, u_t = 1.
  const ScalarField u = catalog_entry("bowl").field + coordinate_t();
  CHECK(ma_density(u, kProbe) == doctest::Approx(4.0 + 12.0));
  CHECK(kohn_laplacian(u, kProbe) == doctest::Approx(4.0));
}

TEST_CASE("radial determinant formula and the gauge") {
  const Profile square{"s^2", [](double s) { return std::array<double, 3>{s * s, 2.0 * s, 2.0}; }, {}};
  const ScalarField u = radial_field(square);
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> d(-0.8, 0.8);
  for (int i = 0; i < 50; ++i) {
    const Point p{d(g), d(g), d(g)};
    const double q = p.x * p.x + p.y * p.y;
    if (q < 0.01) continue;
    const double r = q * q + p.t * p.t;
    const double expected = 48.0 * q * q * (4.0 * r * 2.0 + 3.0 * 2.0 * r) * 2.0 * r;
    CHECK(horizontal_hessian(u, p).det() == doctest::Approx(expected).epsilon(1e-10));
    CHECK(radial_det_closed_form(square, p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(horizontal_hessian(gauge_field(), p).det()) < 1e-9);
  }
}

TEST_CASE("field algebra and domains") {
  const ScalarField g = gauge_field();
  CHECK_FALSE(g.in_domain(origin));
  CHECK(g.in_domain(kProbe));
  const ScalarField sum = g + catalog_entry("bowl").field;
  CHECK_FALSE(sum.in_domain(origin));
  const ScalarField c = ScalarField::continuous("c", [](const Point& p) { return p.x; });
  CHECK_FALSE(c.is_smooth());
  CHECK_THROWS(c.jet(kProbe));
  const ScalarField fd = ScalarField::finite_difference(
      "fd", [](const Point& p) { return p.x * p.x * p.y + p.t; }, 1e-4);
  const Jet2 j = fd.jet(kProbe);
  CHECK(j.u_xy() == doctest::Approx(2.0 * kProbe.x).epsilon(1e-6));
  CHECK(j.u_t() == doctest::Approx(1.0).epsilon(1e-8));
}
