#pragma once

/// \file convexity.hpp
/// H-convexity checks by the two equivalent characterizations (PSD horizontal Hessian,
/// convexity along group segments in horizontal planes), convex composition and the
/// sampled Lipschitz estimate.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "hma/field.hpp"
#include "hma/region.hpp"

namespace hma {

enum class Verdict { convex, not_convex, inconclusive };

const char* to_string(Verdict v) noexcept;

struct ConvexityReport {
  /// Smallest eigenvalue of H(u) seen (PSD check only).
  std::optional<double> min_eigenvalue_seen;
  /// Largest u(segment) - chord seen (segment check only).
  std::optional<double> segment_violation;
  Point worst_point;
  Verdict verdict = Verdict::inconclusive;
  /// Samples actually evaluated (points outside u's domain are skipped).
  std::size_t evaluated = 0;
};

inline constexpr double kConvexityTolerance = 1e-8;

/// Eigenvalues of H(u) on shifted Halton samples of the region. A sample fails when its
/// smallest eigenvalue is below -tol * (1 + |largest eigenvalue|). Throws
/// std::invalid_argument for samples == 0.
ConvexityReport check_psd(const ScalarField& u, const Region& region, std::size_t samples,
                          double tol = kConvexityTolerance, std::uint64_t seed = kDefaultSeed);

/// Checks u(xi0 o delta_l(xi0^{-1} o xi)) <= u(xi0) + l (u(xi) - u(xi0)) on a grid of l in
/// [0, 1] for `samples` pairs with xi = xi0 o (a, b, 0), (a, b) uniform in a disk of
/// radius inradius / 2. Pairs whose segment leaves the region or u's domain are redrawn.
/// A violation counts when it exceeds tol * (1 + |u(xi0)| + |u(xi)|).
ConvexityReport check_group_segments(const ScalarField& u, const Region& region,
                                     std::size_t samples, double tol = kConvexityTolerance,
                                     std::uint64_t seed = kDefaultSeed);

/// f(a, b) for a convex profile nondecreasing in each argument. `jet` may be empty, in
/// which case compositions are value-only.
struct BivariateProfile {
  std::string name;
  std::function<double(double, double)> value;
  std::function<BivariateJet(double, double)> jet;
};

/// w = f(u1, u2). Smooth when f has a jet and both inputs are smooth; otherwise
/// derivative queries throw NotSmoothError.
ScalarField convex_compose(const BivariateProfile& f, const ScalarField& u1,
                           const ScalarField& u2);

struct LipschitzReport {
  /// max |u(x) - u(y)| / d(x, y) over sampled pairs in B(center, R/4).
  double max_ratio = 0.0;
  /// Sampled osc of u over B(center, 2R), divided by R.
  double bound = 0.0;
  double slack = 1.1;
  bool pass = false;
};

/// Sampled check of |u(x) - u(y)| <= (osc_{B(center, 2R)} u / R) d(x, y) on B(center, R/4).
/// Throws std::invalid_argument ("domain too small") when samples of B(center, 2R) fall
/// outside u's domain.
LipschitzReport lipschitz_check(const ScalarField& u, const Point& center, double R,
                                std::size_t pairs, double slack = 1.1,
                                std::uint64_t seed = kDefaultSeed);

}  // namespace hma
