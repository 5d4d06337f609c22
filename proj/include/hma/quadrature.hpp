#pragma once

/// \file quadrature.hpp
/// Deterministic tensor quadrature over Region.
///
/// Gauge balls and annuli are integrated in gauge-polar coordinates
/// (rho, psi, theta), in which the region boundary is a coordinate surface and
/// Lebesgue measure is rho^3 d rho d psi d theta. The latitude psi is further
/// reparametrized as psi = (pi/4)(3v - v^3) so the sqrt(cos psi) factor of the
/// horizontal radius becomes smooth at the poles. Boxes use Cartesian cells. Each
/// cell carries a Gauss-Legendre rule; the two finest refinement levels give the
/// error indicator.

#include <cstddef>
#include <functional>

#include "hma/region.hpp"

namespace hma {

struct QuadratureSpec {
  /// Cells per axis at the coarsest level (>= 8).
  int base_resolution = 8;
  /// Number of doublings past the base (>= 1); the value comes from the finest level.
  int refinement_levels = 1;
  /// Radius of the gauge ball about the region center removed before integrating.
  double singular_exclusion = 0.0;
  /// Gauss-Legendre points per cell and axis, 1 (midpoint) to 4.
  int points_per_cell = 2;

  /// Throws std::invalid_argument on an inconsistent spec.
  void validate(const Region& region) const;
  int finest_cells() const noexcept { return base_resolution << refinement_levels; }

  /// The settings whose finest level has `nodes_per_axis` Gauss nodes per axis
  /// (two points per cell, one refinement level).
  static QuadratureSpec from_resolution(int nodes_per_axis, double singular_exclusion = 0.0);
};

/// A quadrature value with its refinement error indicator.
struct MeasureEstimate {
  double value = 0.0;
  /// |finest - previous level|.
  double error_indicator = 0.0;
  /// Cells at the finest level.
  std::size_t cells = 0;
};

using Density = std::function<double(const Point&)>;

/// Integral of the density over the region (minus the excluded ball). Exceptions from
/// the density propagate.
MeasureEstimate integrate(const Density& density, const Region& region,
                          const QuadratureSpec& spec);

/// Midpoint rule on the region's bounding box with a membership indicator, at
/// `resolution` and `resolution / 2` cells per axis. Slow to converge on curved
/// boundaries; kept as an independent route for cross-checks.
MeasureEstimate integrate_bounding_box(const Density& density, const Region& region,
                                       int resolution);

/// Gauss-Legendre nodes and weights on [-1, 1] for 1 to 4 points.
struct GaussRule {
  double nodes[4];
  double weights[4];
  int size;
};
GaussRule gauss_legendre(int points);

}  // namespace hma
