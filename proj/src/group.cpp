#include "hma/group.hpp"

#include <cmath>
#include <stdexcept>

namespace hma {

namespace {

Point scale(double lambda, const Point& a) noexcept {
  return {lambda * a.x, lambda * a.y, lambda * lambda * a.t};
}

}  // namespace

Point compose(const Point& a, const Point& b) noexcept {
  return {a.x + b.x, a.y + b.y, a.t + b.t + 2.0 * (b.x * a.y - b.y * a.x)};
}

Point inverse(const Point& a) noexcept { return {-a.x, -a.y, -a.t}; }

Point dilate(double lambda, const Point& a) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("dilate: lambda must be positive");
  }
  return scale(lambda, a);
}

double gauge4(const Point& a) noexcept {
  const double r2 = a.x * a.x + a.y * a.y;
  return r2 * r2 + a.t * a.t;
}

double gauge(const Point& a) noexcept {
  // sqrt(sqrt(.)) keeps gauge(dilate(l, p)) == l * gauge(p) to the last bit more often than pow.
  return std::sqrt(std::sqrt(gauge4(a)));
}

double distance(const Point& a, const Point& b) noexcept { return gauge(compose(inverse(b), a)); }

Point exp_flow(Direction direction, double sigma, const Point& a) noexcept {
  if (direction == Direction::X) {
    return {a.x + sigma, a.y, a.t + 2.0 * sigma * a.y};
  }
  return {a.x, a.y + sigma, a.t - 2.0 * sigma * a.x};
}

Point group_segment(const Point& base, const Point& target, double lambda) {
  if (lambda < 0.0) {
    throw std::invalid_argument("group_segment: lambda must be nonnegative");
  }
  return compose(base, scale(lambda, compose(inverse(base), target)));
}

double plane_residual(const Point& base, const Point& p) noexcept {
  return p.t - base.t - 2.0 * (p.x * base.y - p.y * base.x);
}

bool HorizontalPlane::contains(const Point& p) const noexcept {
  return std::abs(residual(p)) <= kTolerance * (1.0 + std::abs(base_.t));
}

GaugeBall::GaugeBall(const Point& center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("GaugeBall: radius must be positive");
  }
}

double lambda_to_boundary(const Point& base, const Point& target, const GaugeBall& ball) {
  if (base == target) {
    throw std::invalid_argument("lambda_to_boundary: base and target coincide");
  }
  if (!HorizontalPlane(base).contains(target)) {
    throw std::invalid_argument("lambda_to_boundary: target is not on the horizontal plane of base");
  }
  if (!ball.contains(base) || !ball.contains(target)) {
    throw std::invalid_argument("lambda_to_boundary: base and target must lie inside the ball");
  }
  const auto excess = [&](double lambda) {
    return distance(group_segment(base, target, lambda), ball.center()) - ball.radius();
  };
  double lo = 1.0;
  double hi = 2.0;
  while (excess(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hma
