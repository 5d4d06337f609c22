#pragma once

/// \file mollified_max.hpp
/// Smooth convex regularization of max{x1, x2} by a radial bump kernel.
///
/// f_h(x1, x2) = h^-2 \int k((x - y) / h) max{y1, y2} dy with k(s) = K exp(-1 / (1 - s^2))
/// on the unit disk, normalized to unit mass. Writing max = mean + |difference| / 2 reduces
/// f_h to a one-dimensional integral against the kernel's marginal along (1, -1) / sqrt 2:
///
///   f_h = (x1 + x2) / 2 + (1/2) \int g(a) |delta - sqrt(2) h a| da,   delta = x1 - x2,
///
/// so f_h = max exactly once |delta| >= sqrt(2) h.

#include "hma/convexity.hpp"
#include "hma/jet.hpp"

namespace hma {

/// The normalized kernel k(s) for s = |y| (zero for s >= 1).
double bump_kernel(double s);

/// Marginal g(a) = \int k(sqrt(a^2 + b^2)) db, supported on [-1, 1].
double bump_marginal(double a);

/// f_h(x1, x2). Throws std::invalid_argument unless h > 0.
double mollified_max(double x1, double x2, double h);

/// Value, gradient and Hessian of f_h at (x1, x2).
BivariateJet mollified_max_jet(double x1, double x2, double h);

/// f_h as a profile for convex_compose.
BivariateProfile mollified_max_profile(double h);

/// The kernel constant alpha in f_h(x, x) = x + alpha h, computed two ways.
struct AlphaConstant {
  /// f_h(0, 0) / h through the tabulated marginal.
  double via_marginal = 0.0;
  /// 2 sqrt(2) \int_0^1 s^2 k(s) ds, with the circle integral of |y1 - y2| / 2 done
  /// numerically.
  double via_polar = 0.0;
  double relative_gap() const noexcept;
};

AlphaConstant alpha_constant();

}  // namespace hma
