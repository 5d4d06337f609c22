#pragma once

/// \file group.hpp
/// Exact algebra and geometry of the first Heisenberg group H^1 = R^3.
///
/// Group law: a o b = (a.x + b.x, a.y + b.y, a.t + b.t + 2(b.x a.y - b.y a.x)).
/// The t coordinate carries squared horizontal length units, so dilations act
/// as (lx, ly, l^2 t) and the homogeneous dimension is 4.

namespace hma {

struct Point {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline constexpr Point origin{};

Point compose(const Point& a, const Point& b) noexcept;

/// The group inverse is plain negation.
Point inverse(const Point& a) noexcept;

/// delta_lambda(a) = (lambda x, lambda y, lambda^2 t). Throws std::invalid_argument for lambda <= 0.
Point dilate(double lambda, const Point& a);

/// rho^4 = (x^2 + y^2)^2 + t^2, the polynomial underlying the gauge.
double gauge4(const Point& a) noexcept;

/// rho = ((x^2 + y^2)^2 + t^2)^{1/4}.
double gauge(const Point& a) noexcept;

/// Left-invariant gauge distance d(a, b) = rho(b^{-1} o a).
double distance(const Point& a, const Point& b) noexcept;

enum class Direction { X, Y };

/// Flow of the left-invariant field X = d_x + 2y d_t (or Y = d_y - 2x d_t) for time sigma.
Point exp_flow(Direction direction, double sigma, const Point& a) noexcept;

/// base o delta_lambda(base^{-1} o target) for lambda >= 0 (lambda = 0 gives base).
/// Throws std::invalid_argument for negative lambda.
Point group_segment(const Point& base, const Point& target, double lambda);

/// Plane-equation residual t - t0 - 2(x y0 - y x0) of p against the horizontal plane through base.
double plane_residual(const Point& base, const Point& p) noexcept;

class HorizontalPlane {
 public:
  /// Membership tolerance: |residual| <= kTolerance * (1 + |t0|).
  static constexpr double kTolerance = 1e-10;

  explicit HorizontalPlane(const Point& base) noexcept : base_(base) {}

  const Point& base() const noexcept { return base_; }
  double residual(const Point& p) const noexcept { return plane_residual(base_, p); }
  bool contains(const Point& p) const noexcept;

 private:
  Point base_;
};

class GaugeBall {
 public:
  /// Throws std::invalid_argument unless radius > 0.
  GaugeBall(const Point& center, double radius);

  const Point& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  bool contains(const Point& p) const noexcept { return distance(p, center_) < radius_; }

 private:
  Point center_;
  double radius_;
};

/// The unique lambda > 1 with group_segment(base, target, lambda) on the ball's boundary.
///
/// Found by bisection on d(segment(lambda), center) - radius over [1, hi], hi doubled
/// until the sign flips, to relative tolerance 1e-12. Requires base and target inside
/// the ball, target != base, and target on the horizontal plane through base; each
/// violation throws std::invalid_argument.
double lambda_to_boundary(const Point& base, const Point& target, const GaugeBall& ball);

}  // namespace hma
