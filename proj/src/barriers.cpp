#include "hma/barriers.hpp"

#include <sstream>
#include <stdexcept>

#include "hma/horizontal.hpp"

namespace hma {

namespace {

std::string format(const char* prefix, std::initializer_list<double> values) {
  std::ostringstream os;
  os << prefix << "(";
  bool first = true;
  for (double v : values) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

ScalarField gauge_field() {
  return ScalarField::expression(
      "gauge",
      [](auto x, auto y, auto t) {
        const auto q = x * x + y * y;
        return pow(q * q + t * t, 0.25);
      },
      [](const Point& p) { return gauge4(p) > 0.0; });
}

ScalarField gauge_cone(const Point& center, double R, double m) {
  if (!(R > 0.0)) throw std::invalid_argument("gauge_cone: R must be positive");
  if (m < 0.0) throw std::invalid_argument("gauge_cone: m must be nonnegative");
  const ScalarField d = gauge_field().left_translate(inverse(center));
  return ((m / R) * d - m).renamed(format("cone", {center.x, center.y, center.t, R, m}));
}

ScalarField quartic_barrier(double R, double sigma, double m0, const Point& center) {
  if (!(R > 0.0)) throw std::invalid_argument("quartic_barrier: R must be positive");
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw std::invalid_argument("quartic_barrier: sigma must lie in (0, 1)");
  }
  if (!(m0 < 0.0)) throw std::invalid_argument("quartic_barrier: m0 must be negative");
  const double R4 = R * R * R * R;
  const double k = m0 / ((1.0 - sigma * sigma * sigma * sigma) * R4);
  ScalarField r = quartic_norm();
  if (!(center == origin)) r = r.left_translate(inverse(center));
  return ((-k) * r + k * R4).renamed(format("quartic_barrier", {R, sigma, m0}));
}

ScalarField exp_barrier(double lambda, double M) {
  if (!(lambda > 0.0)) throw std::invalid_argument("exp_barrier: lambda must be positive");
  return ScalarField::expression(format("exp_barrier", {lambda, M}),
                                 [lambda, M](auto x, auto y, auto) {
                                   return M - exp(lambda * x) - exp(lambda * y);
                                 });
}

ScalarField epsilon_perturb(const ScalarField& u, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon_perturb: eps must be positive");
  const ScalarField bowl =
      ScalarField::expression("bowl", [](auto x, auto y, auto) { return x * x + y * y; });
  return (u + eps * bowl).renamed(u.name() + "+eps");
}

}  // namespace hma
