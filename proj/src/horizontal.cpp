#include "hma/horizontal.hpp"

#include <cmath>

namespace hma {

double HorizontalHessian::min_eigenvalue() const noexcept {
  const double mean = 0.5 * (h11 + h22);
  const double half_gap = std::hypot(0.5 * (h11 - h22), h12);
  return mean - half_gap;
}

double HorizontalHessian::max_eigenvalue() const noexcept {
  const double mean = 0.5 * (h11 + h22);
  const double half_gap = std::hypot(0.5 * (h11 - h22), h12);
  return mean + half_gap;
}

HorizontalJet horizontal_jet(const Jet2& j, const Point& p) noexcept {
  const double x = p.x;
  const double y = p.y;
  HorizontalJet h;
  h.xu = j.u_x() + 2.0 * y * j.u_t();
  h.yu = j.u_y() - 2.0 * x * j.u_t();
  h.ut = j.u_t();
  h.xxu = j.u_xx() + 4.0 * y * j.u_xt() + 4.0 * y * y * j.u_tt();
  h.yyu = j.u_yy() - 4.0 * x * j.u_yt() + 4.0 * x * x * j.u_tt();
  // XY and YX share every second-order term; they differ only by the commutator -4 u_t.
  const double shared = j.u_xy() - 2.0 * x * j.u_xt() + 2.0 * y * j.u_yt() - 4.0 * x * y * j.u_tt();
  h.xyu = shared - 2.0 * j.u_t();
  h.yxu = shared + 2.0 * j.u_t();
  return h;
}

HorizontalJet horizontal_jet(const ScalarField& u, const Point& p) {
  return horizontal_jet(u.jet(p), p);
}

Matrix2 horizontal_hessian_c(const HorizontalJet& h, double c) noexcept {
  return {h.xxu, h.xyu + c * h.ut, h.yxu - c * h.ut, h.yyu};
}

Matrix2 horizontal_hessian_c(const ScalarField& u, const Point& p, double c) {
  return horizontal_hessian_c(horizontal_jet(u, p), c);
}

HorizontalHessian horizontal_hessian(const HorizontalJet& h) noexcept {
  return {h.xxu, 0.5 * (h.xyu + h.yxu), h.yyu};
}

HorizontalHessian horizontal_hessian(const ScalarField& u, const Point& p) {
  return horizontal_hessian(horizontal_jet(u, p));
}

HorizontalHessian adjoint_hessian(const HorizontalJet& h) noexcept {
  return {h.yyu, -0.5 * (h.xyu + h.yxu), h.xxu};
}

HorizontalHessian adjoint_hessian(const ScalarField& u, const Point& p) {
  return adjoint_hessian(horizontal_jet(u, p));
}

double trace_product(const HorizontalHessian& a, const HorizontalHessian& b) noexcept {
  return a.h11 * b.h11 + 2.0 * a.h12 * b.h12 + a.h22 * b.h22;
}

double ma_density(const HorizontalJet& h) noexcept {
  return horizontal_hessian(h).det() + 12.0 * h.ut * h.ut;
}

double ma_density(const ScalarField& u, const Point& p) { return ma_density(horizontal_jet(u, p)); }

double kohn_laplacian(const ScalarField& u, const Point& p) {
  const HorizontalJet h = horizontal_jet(u, p);
  return h.xxu + h.yyu;
}

ScalarField quartic_norm() {
  return ScalarField::expression("r", [](auto x, auto y, auto t) {
    const auto q = x * x + y * y;
    return q * q + t * t;
  });
}

ScalarField radial_field(const Profile& h) { return compose(h, quartic_norm()); }

double radial_det_closed_form(const Profile& h, const Point& p) {
  const double q = p.x * p.x + p.y * p.y;
  const double r = gauge4(p);
  const auto d = h.eval(r);
  return 48.0 * q * q * (4.0 * r * d[2] + 3.0 * d[1]) * d[1];
}

}  // namespace hma
