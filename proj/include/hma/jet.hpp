#pragma once

/// \file jet.hpp
/// Second-order Euclidean jets in the three coordinates (x, y, t).
///
/// A Jet2 carries value, gradient and the symmetric Hessian of a function at one point.
/// Arithmetic follows the exact sum, product and chain rules truncated at order two, so
/// any expression written generically over the scalar type yields its 2-jet directly.

#include <array>
#include <cmath>
#include <cstddef>

#include "hma/group.hpp"

namespace hma {

/// Index of the unique storage slot of d^2/(d_i d_j), axes 0 = x, 1 = y, 2 = t.
constexpr std::size_t hess_index(std::size_t i, std::size_t j) noexcept {
  constexpr std::size_t table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return table[i][j];
}

struct Jet2 {
  double value = 0.0;
  std::array<double, 3> grad{};
  /// xx, xy, xt, yy, yt, tt
  std::array<double, 6> hess{};

  static Jet2 constant(double c) noexcept { return Jet2{c, {}, {}}; }
  static Jet2 variable(std::size_t axis, double at) noexcept {
    Jet2 j{at, {}, {}};
    j.grad[axis] = 1.0;
    return j;
  }

  double second(std::size_t i, std::size_t j) const noexcept { return hess[hess_index(i, j)]; }

  double u_x() const noexcept { return grad[0]; }
  double u_y() const noexcept { return grad[1]; }
  double u_t() const noexcept { return grad[2]; }
  double u_xx() const noexcept { return hess[0]; }
  double u_xy() const noexcept { return hess[1]; }
  double u_xt() const noexcept { return hess[2]; }
  double u_yy() const noexcept { return hess[3]; }
  double u_yt() const noexcept { return hess[4]; }
  double u_tt() const noexcept { return hess[5]; }

  Jet2& operator+=(const Jet2& o) noexcept;
  Jet2& operator-=(const Jet2& o) noexcept;
  Jet2& operator*=(double s) noexcept;
  Jet2& operator+=(double c) noexcept {
    value += c;
    return *this;
  }
};

Jet2 operator+(Jet2 a, const Jet2& b) noexcept;
Jet2 operator-(Jet2 a, const Jet2& b) noexcept;
Jet2 operator-(Jet2 a) noexcept;
Jet2 operator*(const Jet2& a, const Jet2& b) noexcept;
Jet2 operator/(const Jet2& a, const Jet2& b) noexcept;
Jet2 operator+(Jet2 a, double c) noexcept;
Jet2 operator+(double c, Jet2 a) noexcept;
Jet2 operator-(Jet2 a, double c) noexcept;
Jet2 operator-(double c, const Jet2& a) noexcept;
Jet2 operator*(Jet2 a, double s) noexcept;
Jet2 operator*(double s, Jet2 a) noexcept;
Jet2 operator/(Jet2 a, double s) noexcept;
Jet2 operator/(double c, const Jet2& a) noexcept;

/// f(u) given f(u), f'(u), f''(u) at u.value.
Jet2 chain(const Jet2& u, double f0, double f1, double f2) noexcept;

/// Second-order data of a bivariate profile f(a, b) at one point.
struct BivariateJet {
  double value = 0.0;
  double da = 0.0;
  double db = 0.0;
  double daa = 0.0;
  double dab = 0.0;
  double dbb = 0.0;
};

/// f(a, b) composed with two jets.
Jet2 chain2(const Jet2& a, const Jet2& b, const BivariateJet& f) noexcept;

// Generic expressions call exp/log/... unqualified for both double and Jet2 arguments.
using std::cos;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;

Jet2 exp(const Jet2& u) noexcept;
Jet2 log(const Jet2& u) noexcept;
Jet2 sqrt(const Jet2& u) noexcept;
Jet2 pow(const Jet2& u, double p) noexcept;
Jet2 sin(const Jet2& u) noexcept;
Jet2 cos(const Jet2& u) noexcept;

/// Jet at xi of the left translate xi -> f(eta o xi), given the jet of f at eta o xi.
/// Left translation is affine in xi, so this is an exact pullback.
Jet2 pullback_left_translation(const Jet2& jet_at_image, const Point& eta) noexcept;

/// The coordinates of p seeded as independent jet variables.
struct JetPoint {
  Jet2 x;
  Jet2 y;
  Jet2 t;
};

inline JetPoint seed(const Point& p) noexcept {
  return {Jet2::variable(0, p.x), Jet2::variable(1, p.y), Jet2::variable(2, p.t)};
}

}  // namespace hma
