#pragma once

/// \file region.hpp
/// Integration and sampling regions: gauge balls, axis-aligned boxes and concentric
/// gauge annuli.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hma/group.hpp"

namespace hma {

struct BallRegion {
  Point center;
  double radius = 1.0;
};

struct BoxRegion {
  Point lo;
  Point hi;
};

/// B_outer(center) minus the closed ball of radius inner.
struct AnnulusRegion {
  Point center;
  double inner = 0.5;
  double outer = 1.0;
};

/// Point at gauge-polar coordinates (rho, psi, theta) about the origin:
/// (rho sqrt(cos psi) cos theta, rho sqrt(cos psi) sin theta, rho^2 sin psi).
/// Lebesgue measure in these coordinates is rho^3 d rho d psi d theta.
Point gauge_polar(double rho, double psi, double theta) noexcept;

class Region {
 public:
  using Shape = std::variant<BallRegion, BoxRegion, AnnulusRegion>;

  /// Each factory validates its parameters and throws std::invalid_argument.
  static Region ball(const Point& center, double radius);
  static Region box(const Point& lo, const Point& hi);
  static Region annulus(const Point& center, double inner, double outer);

  const Shape& shape() const noexcept { return shape_; }
  bool is_gauge_region() const noexcept { return !std::holds_alternative<BoxRegion>(shape_); }

  bool contains(const Point& p) const noexcept;
  /// Ball/annulus center, or the box midpoint.
  Point center() const noexcept;
  /// Largest gauge radius about center() that stays inside (annulus: its half width).
  double inradius() const noexcept;
  /// Lebesgue volume when known in closed form for boxes; gauge regions return the
  /// value scaled from |B_1| = pi^2 / 2.
  double volume() const noexcept;
  std::string describe() const;

  /// The same region with the gauge ball of radius eps about center() removed.
  /// eps = 0 returns the region unchanged; boxes reject eps > 0.
  Region excise(double eps) const;

  /// Maps the unit cube onto the region, uniformly with respect to Lebesgue measure.
  Point map_unit(const std::array<double, 3>& u) const noexcept;

  /// Deterministic boundary samples. Gauge spheres use a (psi, theta) grid with `levels`
  /// latitude rows (poles included) and `angles` longitudes; boxes use a face grid.
  std::vector<Point> boundary_samples(std::size_t levels, std::size_t angles) const;

 private:
  explicit Region(Shape shape) : shape_(shape) {}
  Shape shape_;
};

/// Seed used wherever a caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

/// Shifted Halton points (bases 2, 3, 5) mapped into the region. The shift comes from
/// the seed, so equal seeds give identical samples.
std::vector<Point> interior_samples(const Region& region, std::size_t count, std::uint64_t seed);

/// Gauge-sphere samples of radius `radius` about `center`, on the same grid as
/// Region::boundary_samples.
std::vector<Point> sphere_samples(const Point& center, double radius, std::size_t levels,
                                  std::size_t angles);

}  // namespace hma
