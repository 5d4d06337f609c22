#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hma/chain.hpp"

using namespace hma;

namespace {

const double k17 = std::pow(17.0, 0.25);
const double k8 = std::pow(8.0, 0.25);

}  // namespace

TEST_CASE("near case factors and gauges") {
  const double R = 1.0;
  const Point start{0.1, 0.2, R * R / 16.0};
  const ChainReport c = build_chain(start, R);
  CHECK(c.chain_case == ChainCase::near);
  REQUIRE(c.steps.size() == 5);
  const double expected[] = {0.5, 0.5, (3.0 - k17) / (4.0 - k17), (3.0 - k8) / (4.0 - k8), 2.0 / 3.0};
  double product = 1.0;
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(c.steps[i].factor == doctest::Approx(expected[i]).epsilon(1e-14));
    CHECK(c.steps[i].lambda >= c.steps[i].lambda_bound - 1e-10);
    CHECK(HorizontalPlane(c.steps[i].from).contains(c.steps[i].to));
    product *= expected[i];
  }
  CHECK(c.total_factor == doctest::Approx(product));
  CHECK(near_case_constant() == doctest::Approx(product / 0.5));
  const double sigma = std::sqrt(start.t) / 2.0;
  CHECK(gauge(c.steps[1].to) == doctest::Approx(k17 * sigma).epsilon(1e-12));
  CHECK(gauge(c.steps[2].to) == doctest::Approx(k8 * sigma).epsilon(1e-12));
  CHECK(gauge(c.steps[3].to) == doctest::Approx(sigma).epsilon(1e-12));
  CHECK(c.steps[4].to == origin);
  CHECK(c.steps[0].label == "project");
  CHECK(c.steps[1].label == "near:X");
}

TEST_CASE("negative t uses the mirrored order") {
  const ChainReport c = build_chain(Point{0, 0, -0.1}, 1.0);
  REQUIRE(c.steps.size() == 4);
  CHECK(c.steps[0].label == "near:Y");
  CHECK(c.steps[1].label == "near:X");
  CHECK(c.steps[2].label == "near:-Y");
  CHECK(c.steps[3].label == "near:-X");
  const double sigma = std::sqrt(0.1) / 2.0;
  CHECK(gauge(c.steps[0].to) == doctest::Approx(k17 * sigma).epsilon(1e-12));
}

TEST_CASE("trivial chains") {
  const ChainReport c = build_chain(origin, 1.0);
  CHECK(c.steps.empty());
  CHECK(c.total_factor == 1.0);
  CHECK_THROWS_AS(build_chain(Point{0, 0, 1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_chain(Point{2, 0, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("far case recursion") {
  const double R = 2.0;
  const double t0 = 0.9 * R * R;
  const ChainReport c = build_chain(Point{0.0, 0.0, t0}, R);
  CHECK(c.chain_case == ChainCase::far);
  REQUIRE(c.iterations >= 1);
  REQUIRE(c.t_levels.size() == static_cast<std::size_t>(c.iterations) + 1);
  // t_{j+1} = t_j - 4 d_j^2 with d_j^2 = (R^2 - t_j) / 6, so R^2 - t grows by 5/3.
  for (int j = 0; j < c.iterations; ++j) {
    const double tj = c.t_levels[j];
    CHECK(c.t_levels[j + 1] == doctest::Approx(tj - 4.0 * (R * R - tj) / 6.0).epsilon(1e-12));
  }
  CHECK(c.t_levels.back() <= R * R / 4.0);
  CHECK(c.t_levels.back() >= -R * R / 4.0);
  CHECK(c.t_levels[c.iterations - 1] > R * R / 4.0);
  CHECK(*c.iteration_log > c.iterations - 1);
  CHECK(*c.iteration_log <= c.iterations + 1e-12);
  CHECK(*c.exponent_form_recursion == doctest::Approx(*c.exponent_form_factor).epsilon(1e-10));
  CHECK(*c.exponent_form_factor == doctest::Approx(chain_exponent_form(t0, R)));
  for (const ChainStep& s : c.steps) {
    CHECK(s.lambda >= s.lambda_bound - 1e-10);
    CHECK(s.factor > 0.0);
    CHECK(s.factor < 1.0);
  }
  CHECK(c.total_factor > 0.0);
  CHECK(c.total_factor < 1.0);
  CHECK(far_loop_constant() > 0.0);
  CHECK(far_loop_constant() < 1.0);
}

TEST_CASE("points list starts at the start") {
  const ChainReport c = build_chain(Point{0.2, 0.1, 0.05}, 1.0);
  const auto pts = c.points();
  CHECK(pts.size() == c.steps.size() + 1);
  CHECK(pts.front() == c.start);
  CHECK(pts.back() == origin);
}
