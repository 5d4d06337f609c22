#include "hma/mollified_max.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hma/quadrature.hpp"

namespace hma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr int kTableIntervals = 4096;
constexpr double kQuadTol = 1e-13;

double unnormalized_bump(double s) {
  const double q = 1.0 - s * s;
  return q > 0.0 ? std::exp(-1.0 / q) : 0.0;
}

template <class F>
double adaptive(F f, double a, double b) {
  if (!(b > a)) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, kQuadTol);
}

double bump_mass_constant() {
  static const double mass =
      2.0 * kPi * adaptive([](double s) { return s * unnormalized_bump(s); }, 0.0, 1.0);
  return 1.0 / mass;
}

/// Cumulative moments G0(s) = \int_{-1}^s g and G1(s) = \int_{-1}^s a g on a uniform grid,
/// interpolated by cubic Hermite with the exact derivatives g and a g.
class MarginalTable {
 public:
  MarginalTable() {
    const GaussRule rule = gauss_legendre(4);
    nodes_g_.resize(kTableIntervals + 1);
    g0_.assign(kTableIntervals + 1, 0.0);
    g1_.assign(kTableIntervals + 1, 0.0);
    for (int i = 0; i <= kTableIntervals; ++i) nodes_g_[i] = bump_marginal(node(i));
    for (int i = 0; i < kTableIntervals; ++i) {
      const double mid = node(i) + 0.5 * step_;
      double m0 = 0.0;
      double m1 = 0.0;
      for (int q = 0; q < rule.size; ++q) {
        const double a = mid + 0.5 * step_ * rule.nodes[q];
        const double w = 0.5 * step_ * rule.weights[q];
        const double g = bump_marginal(a);
        m0 += w * g;
        m1 += w * a * g;
      }
      g0_[i + 1] = g0_[i] + m0;
      g1_[i + 1] = g1_[i] + m1;
    }
  }

  /// (G0(s), G1(s)) for s in [-1, 1].
  std::pair<double, double> moments(double s) const {
    s = std::clamp(s, -1.0, 1.0);
    const int i = std::min(kTableIntervals - 1, static_cast<int>((s + 1.0) / step_));
    const double a = node(i);
    const double u = (s - a) / step_;
    const double h00 = (1.0 + 2.0 * u) * (1.0 - u) * (1.0 - u);
    const double h10 = u * (1.0 - u) * (1.0 - u);
    const double h01 = u * u * (3.0 - 2.0 * u);
    const double h11 = u * u * (u - 1.0);
    const double b = node(i + 1);
    const double G0 = h00 * g0_[i] + h10 * step_ * nodes_g_[i] + h01 * g0_[i + 1] +
                      h11 * step_ * nodes_g_[i + 1];
    const double G1 = h00 * g1_[i] + h10 * step_ * a * nodes_g_[i] + h01 * g1_[i + 1] +
                      h11 * step_ * b * nodes_g_[i + 1];
    return {G0, G1};
  }

  double total_first_moment() const { return g1_.back(); }

 private:
  double node(int i) const { return -1.0 + i * step_; }

  double step_ = 2.0 / kTableIntervals;
  std::vector<double> nodes_g_;
  std::vector<double> g0_;
  std::vector<double> g1_;
};

const MarginalTable& table() {
  static const MarginalTable instance;
  return instance;
}

/// phi(s) = \int g(a) |s - a| da and its first derivative.
std::pair<double, double> absolute_moment(double s) {
  if (s >= 1.0) return {s, 1.0};
  if (s <= -1.0) return {-s, -1.0};
  const auto [G0, G1] = table().moments(s);
  const double total1 = table().total_first_moment();
  return {s * (2.0 * G0 - 1.0) - 2.0 * G1 + total1, 2.0 * G0 - 1.0};
}

void require_positive(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("mollified_max: h must be positive");
}

}  // namespace

double bump_kernel(double s) { return bump_mass_constant() * unnormalized_bump(s); }

double bump_marginal(double a) {
  const double w2 = 1.0 - a * a;
  if (w2 <= 0.0) return 0.0;
  const double half = adaptive(
      [a](double b) { return unnormalized_bump(std::sqrt(a * a + b * b)); }, 0.0, std::sqrt(w2));
  return 2.0 * bump_mass_constant() * half;
}

double mollified_max(double x1, double x2, double h) {
  require_positive(h);
  const double c = kSqrt2 * h;
  const double delta = x1 - x2;
  if (std::abs(delta) >= c) return std::max(x1, x2);
  return 0.5 * (x1 + x2) + 0.5 * c * absolute_moment(delta / c).first;
}

BivariateJet mollified_max_jet(double x1, double x2, double h) {
  require_positive(h);
  const double c = kSqrt2 * h;
  const double delta = x1 - x2;
  BivariateJet j;
  if (delta >= c) {
    j.value = x1;
    j.da = 1.0;
    return j;
  }
  if (delta <= -c) {
    j.value = x2;
    j.db = 1.0;
    return j;
  }
  const auto [phi, dphi] = absolute_moment(delta / c);
  const double curvature = bump_marginal(delta / c) / c;
  j.value = 0.5 * (x1 + x2) + 0.5 * c * phi;
  j.da = 0.5 + 0.5 * dphi;
  j.db = 0.5 - 0.5 * dphi;
  j.daa = curvature;
  j.dbb = curvature;
  j.dab = -curvature;
  return j;
}

BivariateProfile mollified_max_profile(double h) {
  require_positive(h);
  return {"fh",
          [h](double a, double b) { return mollified_max(a, b, h); },
          [h](double a, double b) { return mollified_max_jet(a, b, h); }};
}

double AlphaConstant::relative_gap() const noexcept {
  return std::abs(via_marginal - via_polar) / std::abs(via_polar);
}

AlphaConstant alpha_constant() {
  AlphaConstant out;
  out.via_marginal = mollified_max(0.0, 0.0, 1.0);
  const double radial = adaptive([](double s) { return s * s * bump_kernel(s); }, 0.0, 1.0);
  // |cos - sin| changes sign at pi/4 and 5pi/4; integrate each smooth piece separately.
  const auto circle = [](double th) { return 0.5 * std::abs(std::cos(th) - std::sin(th)); };
  const double around = adaptive(circle, 0.25 * kPi, 1.25 * kPi) +
                        adaptive(circle, 1.25 * kPi, 2.25 * kPi);
  out.via_polar = radial * around;
  return out;
}

}  // namespace hma
