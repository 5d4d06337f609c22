#include "hma/jet.hpp"

#include <cmath>

namespace hma {

Jet2& Jet2::operator+=(const Jet2& o) noexcept {
  value += o.value;
  for (std::size_t i = 0; i < 3; ++i) grad[i] += o.grad[i];
  for (std::size_t i = 0; i < 6; ++i) hess[i] += o.hess[i];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) noexcept {
  value -= o.value;
  for (std::size_t i = 0; i < 3; ++i) grad[i] -= o.grad[i];
  for (std::size_t i = 0; i < 6; ++i) hess[i] -= o.hess[i];
  return *this;
}

Jet2& Jet2::operator*=(double s) noexcept {
  value *= s;
  for (auto& g : grad) g *= s;
  for (auto& h : hess) h *= s;
  return *this;
}

Jet2 operator+(Jet2 a, const Jet2& b) noexcept { return a += b; }
Jet2 operator-(Jet2 a, const Jet2& b) noexcept { return a -= b; }
Jet2 operator-(Jet2 a) noexcept { return a *= -1.0; }

Jet2 operator*(const Jet2& a, const Jet2& b) noexcept {
  Jet2 r;
  r.value = a.value * b.value;
  for (std::size_t i = 0; i < 3; ++i) r.grad[i] = a.value * b.grad[i] + b.value * a.grad[i];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const std::size_t k = hess_index(i, j);
      r.hess[k] = a.value * b.hess[k] + b.value * a.hess[k] + a.grad[i] * b.grad[j] +
                  a.grad[j] * b.grad[i];
    }
  }
  return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) noexcept {
  const double inv = 1.0 / b.value;
  return a * chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

Jet2 operator+(Jet2 a, double c) noexcept { return a += c; }
Jet2 operator+(double c, Jet2 a) noexcept { return a += c; }
Jet2 operator-(Jet2 a, double c) noexcept { return a += -c; }
Jet2 operator-(double c, const Jet2& a) noexcept { return (-a) + c; }
Jet2 operator*(Jet2 a, double s) noexcept { return a *= s; }
Jet2 operator*(double s, Jet2 a) noexcept { return a *= s; }
Jet2 operator/(Jet2 a, double s) noexcept { return a *= 1.0 / s; }

Jet2 operator/(double c, const Jet2& a) noexcept {
  const double inv = 1.0 / a.value;
  return chain(a, c * inv, -c * inv * inv, 2.0 * c * inv * inv * inv);
}

Jet2 chain(const Jet2& u, double f0, double f1, double f2) noexcept {
  Jet2 r;
  r.value = f0;
  for (std::size_t i = 0; i < 3; ++i) r.grad[i] = f1 * u.grad[i];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const std::size_t k = hess_index(i, j);
      r.hess[k] = f1 * u.hess[k] + f2 * u.grad[i] * u.grad[j];
    }
  }
  return r;
}

Jet2 chain2(const Jet2& a, const Jet2& b, const BivariateJet& f) noexcept {
  Jet2 r;
  r.value = f.value;
  for (std::size_t i = 0; i < 3; ++i) r.grad[i] = f.da * a.grad[i] + f.db * b.grad[i];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      const std::size_t k = hess_index(i, j);
      r.hess[k] = f.da * a.hess[k] + f.db * b.hess[k] + f.daa * a.grad[i] * a.grad[j] +
                  f.dab * (a.grad[i] * b.grad[j] + b.grad[i] * a.grad[j]) +
                  f.dbb * b.grad[i] * b.grad[j];
    }
  }
  return r;
}

Jet2 exp(const Jet2& u) noexcept {
  const double e = std::exp(u.value);
  return chain(u, e, e, e);
}

Jet2 log(const Jet2& u) noexcept {
  const double inv = 1.0 / u.value;
  return chain(u, std::log(u.value), inv, -inv * inv);
}

Jet2 sqrt(const Jet2& u) noexcept {
  const double s = std::sqrt(u.value);
  return chain(u, s, 0.5 / s, -0.25 / (s * u.value));
}

Jet2 pow(const Jet2& u, double p) noexcept {
  const double v = std::pow(u.value, p);
  const double d1 = p * std::pow(u.value, p - 1.0);
  const double d2 = p * (p - 1.0) * std::pow(u.value, p - 2.0);
  return chain(u, v, d1, d2);
}

Jet2 sin(const Jet2& u) noexcept {
  const double s = std::sin(u.value);
  return chain(u, s, std::cos(u.value), -s);
}

Jet2 cos(const Jet2& u) noexcept {
  const double c = std::cos(u.value);
  return chain(u, c, -std::sin(u.value), -c);
}

Jet2 pullback_left_translation(const Jet2& f, const Point& eta) noexcept {
  // eta o xi = (eta.x + x, eta.y + y, eta.t + t + 2(x eta.y - y eta.x)); Jacobian columns:
  // d/dx -> (1, 0, 2 eta.y), d/dy -> (0, 1, -2 eta.x), d/dt -> (0, 0, 1).
  const double a = 2.0 * eta.y;
  const double b = -2.0 * eta.x;
  Jet2 r;
  r.value = f.value;
  r.grad = {f.u_x() + a * f.u_t(), f.u_y() + b * f.u_t(), f.u_t()};
  r.hess[hess_index(0, 0)] = f.u_xx() + 2.0 * a * f.u_xt() + a * a * f.u_tt();
  r.hess[hess_index(0, 1)] = f.u_xy() + b * f.u_xt() + a * f.u_yt() + a * b * f.u_tt();
  r.hess[hess_index(0, 2)] = f.u_xt() + a * f.u_tt();
  r.hess[hess_index(1, 1)] = f.u_yy() + 2.0 * b * f.u_yt() + b * b * f.u_tt();
  r.hess[hess_index(1, 2)] = f.u_yt() + b * f.u_tt();
  r.hess[hess_index(2, 2)] = f.u_tt();
  return r;
}

}  // namespace hma
