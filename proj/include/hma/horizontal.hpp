#pragma once

/// \file horizontal.hpp
/// Horizontal calculus on H^1 built from Euclidean 2-jets.
///
/// X = d_x + 2y d_t and Y = d_y - 2x d_t. Every horizontal quantity is an algebraic
/// function of the Euclidean jet at the point, so all of them are exact given exact jets.

#include "hma/field.hpp"
#include "hma/jet.hpp"

namespace hma {

/// Xu, Yu, u_t and the four second-order horizontal derivatives at one point.
struct HorizontalJet {
  double xu = 0.0;
  double yu = 0.0;
  double ut = 0.0;
  double xxu = 0.0;
  double yyu = 0.0;
  double xyu = 0.0;
  double yxu = 0.0;
};

/// Symmetric 2x2 matrix [[h11, h12], [h12, h22]].
struct HorizontalHessian {
  double h11 = 0.0;
  double h12 = 0.0;
  double h22 = 0.0;

  double det() const noexcept { return h11 * h22 - h12 * h12; }
  double trace() const noexcept { return h11 + h22; }
  double min_eigenvalue() const noexcept;
  double max_eigenvalue() const noexcept;
  double quadratic_form(double a, double b) const noexcept {
    return h11 * a * a + 2.0 * h12 * a * b + h22 * b * b;
  }

  friend HorizontalHessian operator+(const HorizontalHessian& a, const HorizontalHessian& b) {
    return {a.h11 + b.h11, a.h12 + b.h12, a.h22 + b.h22};
  }
  friend HorizontalHessian operator*(double s, const HorizontalHessian& a) {
    return {s * a.h11, s * a.h12, s * a.h22};
  }
};

/// General (possibly non-symmetric) 2x2 matrix, used for H_c(u) with c != 2.
struct Matrix2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;

  double det() const noexcept { return a11 * a22 - a12 * a21; }
  double trace() const noexcept { return a11 + a22; }
  /// Symmetric part, which carries the quadratic form.
  HorizontalHessian symmetric_part() const noexcept { return {a11, 0.5 * (a12 + a21), a22}; }
};

HorizontalJet horizontal_jet(const Jet2& jet, const Point& p) noexcept;
/// Throws DomainError / NotSmoothError as ScalarField::jet does.
HorizontalJet horizontal_jet(const ScalarField& u, const Point& p);

/// [[X^2u, XYu + c u_t], [YXu - c u_t, Y^2u]]; symmetric exactly when c = 2.
Matrix2 horizontal_hessian_c(const HorizontalJet& h, double c) noexcept;
Matrix2 horizontal_hessian_c(const ScalarField& u, const Point& p, double c);

/// The symmetrized horizontal Hessian H(u) = H_2(u).
HorizontalHessian horizontal_hessian(const HorizontalJet& h) noexcept;
HorizontalHessian horizontal_hessian(const ScalarField& u, const Point& p);

/// H*(u) = [[Y^2u, -(XYu + YXu)/2], [-(XYu + YXu)/2, X^2u]], so det H = trace(H* H) / 2.
HorizontalHessian adjoint_hessian(const HorizontalJet& h) noexcept;
HorizontalHessian adjoint_hessian(const ScalarField& u, const Point& p);

/// trace(A B) for symmetric 2x2 matrices.
double trace_product(const HorizontalHessian& a, const HorizontalHessian& b) noexcept;

/// Monge-Ampere density det H(u) + 12 u_t^2.
double ma_density(const HorizontalJet& h) noexcept;
double ma_density(const ScalarField& u, const Point& p);

/// Kohn Laplacian X^2u + Y^2u.
double kohn_laplacian(const ScalarField& u, const Point& p);

/// r = (x^2 + y^2)^2 + t^2 = rho^4 as a field with exact jets.
ScalarField quartic_norm();

/// u = h(r) with r = rho^4. Points where h is irregular at r are outside the domain.
ScalarField radial_field(const Profile& h);

/// Closed form det H(h(r)) = 48 (x^2 + y^2)^2 {4 r h'' + 3 h'} h'.
double radial_det_closed_form(const Profile& h, const Point& p);

}  // namespace hma
