#include "hma/region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hma {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double radical_inverse(std::uint64_t index, std::uint64_t base) noexcept {
  double result = 0.0;
  double f = 1.0 / static_cast<double>(base);
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= static_cast<double>(base);
  }
  return result;
}

std::string point_string(const Point& p) {
  std::ostringstream os;
  os << "(" << p.x << "," << p.y << "," << p.t << ")";
  return os.str();
}

}  // namespace

Point gauge_polar(double rho, double psi, double theta) noexcept {
  const double r = rho * std::sqrt(std::max(0.0, std::cos(psi)));
  return {r * std::cos(theta), r * std::sin(theta), rho * rho * std::sin(psi)};
}

Region Region::ball(const Point& center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("Region::ball: radius must be positive");
  return Region(BallRegion{center, radius});
}

Region Region::box(const Point& lo, const Point& hi) {
  if (!(hi.x > lo.x && hi.y > lo.y && hi.t > lo.t)) {
    throw std::invalid_argument("Region::box: extents must be positive");
  }
  return Region(BoxRegion{lo, hi});
}

Region Region::annulus(const Point& center, double inner, double outer) {
  if (!(inner >= 0.0 && outer > inner)) {
    throw std::invalid_argument("Region::annulus: need 0 <= inner < outer");
  }
  return Region(AnnulusRegion{center, inner, outer});
}

bool Region::contains(const Point& p) const noexcept {
  return std::visit(overloaded{
                        [&](const BallRegion& b) { return distance(p, b.center) < b.radius; },
                        [&](const BoxRegion& b) {
                          return p.x > b.lo.x && p.x < b.hi.x && p.y > b.lo.y && p.y < b.hi.y &&
                                 p.t > b.lo.t && p.t < b.hi.t;
                        },
                        [&](const AnnulusRegion& a) {
                          const double d = distance(p, a.center);
                          return d > a.inner && d < a.outer;
                        }},
                    shape_);
}

Point Region::center() const noexcept {
  return std::visit(overloaded{[](const BallRegion& b) { return b.center; },
                               [](const BoxRegion& b) {
                                 return Point{0.5 * (b.lo.x + b.hi.x), 0.5 * (b.lo.y + b.hi.y),
                                              0.5 * (b.lo.t + b.hi.t)};
                               },
                               [](const AnnulusRegion& a) { return a.center; }},
                    shape_);
}

double Region::inradius() const noexcept {
  return std::visit(
      overloaded{[](const BallRegion& b) { return b.radius; },
                 [](const BoxRegion& b) {
                   // The gauge ball of radius s about the midpoint spans s horizontally
                   // and s^2 vertically.
                   const double hx = 0.5 * std::min(b.hi.x - b.lo.x, b.hi.y - b.lo.y);
                   const double ht = 0.5 * (b.hi.t - b.lo.t);
                   return std::min(hx / std::sqrt(2.0), std::sqrt(ht));
                 },
                 [](const AnnulusRegion& a) { return 0.5 * (a.outer - a.inner); }},
      shape_);
}

double Region::volume() const noexcept {
  constexpr double unit_ball = kPi * kPi / 2.0;
  return std::visit(
      overloaded{[](const BallRegion& b) { return unit_ball * std::pow(b.radius, 4); },
                 [](const BoxRegion& b) {
                   return (b.hi.x - b.lo.x) * (b.hi.y - b.lo.y) * (b.hi.t - b.lo.t);
                 },
                 [](const AnnulusRegion& a) {
                   return unit_ball * (std::pow(a.outer, 4) - std::pow(a.inner, 4));
                 }},
      shape_);
}

std::string Region::describe() const {
  return std::visit(
      overloaded{[](const BallRegion& b) {
                   std::ostringstream os;
                   os << "ball(center=" << point_string(b.center) << ",R=" << b.radius << ")";
                   return os.str();
                 },
                 [](const BoxRegion& b) {
                   return "box(lo=" + point_string(b.lo) + ",hi=" + point_string(b.hi) + ")";
                 },
                 [](const AnnulusRegion& a) {
                   std::ostringstream os;
                   os << "annulus(center=" << point_string(a.center) << ",inner=" << a.inner
                      << ",outer=" << a.outer << ")";
                   return os.str();
                 }},
      shape_);
}

Region Region::excise(double eps) const {
  if (eps < 0.0) throw std::invalid_argument("Region::excise: negative exclusion radius");
  if (eps == 0.0) return *this;
  return std::visit(
      overloaded{[&](const BallRegion& b) {
                   if (eps >= b.radius) {
                     throw std::invalid_argument("Region::excise: exclusion swallows the ball");
                   }
                   return annulus(b.center, eps, b.radius);
                 },
                 [](const BoxRegion&) -> Region {
                   throw std::invalid_argument("Region::excise: boxes have no singular center");
                 },
                 [&](const AnnulusRegion& a) {
                   if (eps >= a.outer) {
                     throw std::invalid_argument("Region::excise: exclusion swallows the annulus");
                   }
                   return annulus(a.center, std::max(eps, a.inner), a.outer);
                 }},
      shape_);
}

Point Region::map_unit(const std::array<double, 3>& u) const noexcept {
  const auto polar = [&](const Point& c, double inner, double outer) {
    const double in4 = std::pow(inner, 4);
    const double rho = std::pow(in4 + u[0] * (std::pow(outer, 4) - in4), 0.25);
    return compose(c, gauge_polar(rho, kPi * (u[1] - 0.5), 2.0 * kPi * u[2]));
  };
  return std::visit(overloaded{[&](const BallRegion& b) { return polar(b.center, 0.0, b.radius); },
                               [&](const BoxRegion& b) {
                                 return Point{b.lo.x + u[0] * (b.hi.x - b.lo.x),
                                              b.lo.y + u[1] * (b.hi.y - b.lo.y),
                                              b.lo.t + u[2] * (b.hi.t - b.lo.t)};
                               },
                               [&](const AnnulusRegion& a) {
                                 return polar(a.center, a.inner, a.outer);
                               }},
                    shape_);
}

std::vector<Point> sphere_samples(const Point& center, double radius, std::size_t levels,
                                  std::size_t angles) {
  std::vector<Point> out;
  if (levels < 2 || angles < 1) {
    throw std::invalid_argument("sphere_samples: need at least two levels and one angle");
  }
  for (std::size_t k = 0; k < levels; ++k) {
    const double psi = -0.5 * kPi + kPi * static_cast<double>(k) / static_cast<double>(levels - 1);
    const bool pole = (k == 0 || k + 1 == levels);
    const std::size_t count = pole ? 1 : angles;
    for (std::size_t j = 0; j < count; ++j) {
      const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(angles);
      Point q = gauge_polar(radius, psi, theta);
      if (pole) q = Point{0.0, 0.0, (k == 0 ? -1.0 : 1.0) * radius * radius};
      out.push_back(compose(center, q));
    }
  }
  return out;
}

std::vector<Point> Region::boundary_samples(std::size_t levels, std::size_t angles) const {
  return std::visit(
      overloaded{[&](const BallRegion& b) {
                   return sphere_samples(b.center, b.radius, levels, angles);
                 },
                 [&](const AnnulusRegion& a) {
                   auto out = sphere_samples(a.center, a.outer, levels, angles);
                   if (a.inner > 0.0) {
                     auto in = sphere_samples(a.center, a.inner, levels, angles);
                     out.insert(out.end(), in.begin(), in.end());
                   } else {
                     out.push_back(a.center);
                   }
                   return out;
                 },
                 [&](const BoxRegion& b) {
                   std::vector<Point> out;
                   const std::size_t n = std::max<std::size_t>(2, angles);
                   const auto lerp = [&](double lo, double hi, std::size_t i) {
                     return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
                   };
                   for (std::size_t i = 0; i < n; ++i) {
                     for (std::size_t j = 0; j < n; ++j) {
                       const double x = lerp(b.lo.x, b.hi.x, i);
                       const double y = lerp(b.lo.y, b.hi.y, j);
                       const double tx = lerp(b.lo.t, b.hi.t, j);
                       const double yy = lerp(b.lo.y, b.hi.y, i);
                       out.push_back({x, y, b.lo.t});
                       out.push_back({x, y, b.hi.t});
                       out.push_back({x, b.lo.y, tx});
                       out.push_back({x, b.hi.y, tx});
                       out.push_back({b.lo.x, yy, tx});
                       out.push_back({b.hi.x, yy, tx});
                     }
                   }
                   return out;
                 }},
      shape_);
}

std::vector<Point> interior_samples(const Region& region, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::array<double, 3> shift{unit(rng), unit(rng), unit(rng)};
  constexpr std::array<std::uint64_t, 3> bases{2, 3, 5};
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::array<double, 3> u{};
    for (std::size_t k = 0; k < 3; ++k) {
      double v = radical_inverse(i + 1, bases[k]) + shift[k];
      v -= std::floor(v);
      // Keep strictly inside so that open-region membership holds.
      u[k] = std::clamp(v, 1e-9, 1.0 - 1e-9);
    }
    out.push_back(region.map_unit(u));
  }
  return out;
}

}  // namespace hma
