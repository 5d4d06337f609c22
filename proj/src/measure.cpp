#include "hma/measure.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hma/barriers.hpp"
#include "hma/horizontal.hpp"

namespace hma {

namespace {

constexpr double kPi = std::numbers::pi;
// Rotates the angular kernel nodes off the integration grids' symmetry lines.
constexpr double kThetaOffset = 0.3713;

template <class F>
double adaptive(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, 1e-13);
}

double kernel_profile(double s) { return s < 1.0 ? std::exp(-1.0 / (1.0 - s)) : 0.0; }

ScalarField mollify_smooth(const ScalarField& u, const KernelRule& rule, const std::string& name) {
  auto value = [u, rule](const Point& p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * u(compose(rule.nodes[i], p));
    return sum;
  };
  auto jet = [u, rule](const Point& p) {
    Jet2 sum;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      Jet2 term = pullback_left_translation(u.jet(compose(rule.nodes[i], p)), rule.nodes[i]);
      term *= rule.weights[i];
      sum += term;
    }
    return sum;
  };
  auto domain = [u, rule](const Point& p) {
    for (const Point& eta : rule.nodes) {
      if (!u.in_domain(compose(eta, p))) return false;
    }
    return true;
  };
  return ScalarField::smooth(name, value, jet, domain);
}

ScalarField mollify_values(const ScalarField& u, const KernelRule& rule, const std::string& name) {
  auto value = [u, rule](const Point& p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * u(compose(rule.nodes[i], p));
    return sum;
  };
  // Central differences of g(a, b, c) = u_h(p o (a, b, c)) at the origin, with steps
  // matched to the kernel's horizontal scale h and vertical scale h^2. The jet of u_h
  // at p is the pullback of g's jet through left translation by p^{-1}.
  auto jet = [value, h = rule.h](const Point& p) {
    const std::array<double, 3> step{0.25 * h, 0.25 * h, 0.25 * h * h};
    const auto g = [&](int i, double di, int j, double dj) {
      std::array<double, 3> c{0.0, 0.0, 0.0};
      if (i >= 0) c[static_cast<std::size_t>(i)] += di;
      if (j >= 0) c[static_cast<std::size_t>(j)] += dj;
      return value(compose(p, Point{c[0], c[1], c[2]}));
    };
    Jet2 r;
    r.value = g(-1, 0.0, -1, 0.0);
    for (int i = 0; i < 3; ++i) {
      const double si = step[static_cast<std::size_t>(i)];
      const double fp = g(i, si, -1, 0.0);
      const double fm = g(i, -si, -1, 0.0);
      r.grad[static_cast<std::size_t>(i)] = (fp - fm) / (2.0 * si);
      r.hess[hess_index(static_cast<std::size_t>(i), static_cast<std::size_t>(i))] =
          (fp - 2.0 * r.value + fm) / (si * si);
      for (int j = i + 1; j < 3; ++j) {
        const double sj = step[static_cast<std::size_t>(j)];
        r.hess[hess_index(static_cast<std::size_t>(i), static_cast<std::size_t>(j))] =
            (g(i, si, j, sj) - g(i, si, j, -sj) - g(i, -si, j, sj) + g(i, -si, j, -sj)) / (4.0 * si * sj);
      }
    }
    return pullback_left_translation(r, inverse(p));
  };
  auto domain = [u, rule](const Point& p) {
    for (const Point& eta : rule.nodes) {
      if (!u.in_domain(compose(eta, p))) return false;
    }
    return true;
  };
  return ScalarField::smooth(name, value, jet, domain);
}

}  // namespace

MeasureEstimate h_measure(const ScalarField& u, const Region& region, const QuadratureSpec& spec) {
  return integrate([&u](const Point& p) { return ma_density(u, p); }, region, spec);
}

MeasureEstimate weighted_h_measure(const ScalarField& u, const Density& weight,
                                   const Region& region, const QuadratureSpec& spec) {
  return integrate(
      [&](const Point& p) {
        const double w = weight(p);
        return w == 0.0 ? 0.0 : w * ma_density(u, p);
      },
      region, spec);
}

MeasureEstimate trace_integral(const ScalarField& u, const Region& region,
                               const QuadratureSpec& spec) {
  return integrate([&u](const Point& p) { return horizontal_hessian(u, p).trace(); }, region,
                   spec);
}

KernelRule group_kernel_rule(double h, int resolution) {
  if (!(h > 0.0)) throw std::invalid_argument("group_kernel_rule: h must be positive");
  if (resolution < 4 || resolution % 2 != 0) {
    throw std::invalid_argument("group_kernel_rule: resolution must be even and >= 4");
  }
  const GaussRule g = gauss_legendre(2);
  const int cells = resolution / 2;
  const auto axis = [&](double a, double b, std::vector<double>& nodes, std::vector<double>& weights) {
    const double width = (b - a) / cells;
    for (int c = 0; c < cells; ++c) {
      for (int q = 0; q < g.size; ++q) {
        nodes.push_back(a + (c + 0.5) * width + 0.5 * width * g.nodes[q]);
        weights.push_back(0.5 * width * g.weights[q]);
      }
    }
  };
  // Radial axis in s = (rho / h)^4, where rho^3 d rho = h^4 ds / 4: one Gauss-Legendre
  // rule on [0, 1] resolves the steep kernel derivatives far better than cells in rho.
  std::vector<double> sn, sw;
  for (double z : boost::math::legendre_p_zeros<double>(resolution)) {
    const double d = boost::math::legendre_p_prime(resolution, z);
    const double w = 1.0 / ((1.0 - z * z) * d * d);
    for (double sign : {-1.0, 1.0}) {
      if (z == 0.0 && sign > 0.0) continue;
      sn.push_back(0.5 * (1.0 + sign * z));
      sw.push_back(z == 0.0 ? 2.0 * w : w);
    }
  }
  std::vector<double> vn, vw, tn, tw;
  axis(-1.0, 1.0, vn, vw);
  axis(0.0, 2.0 * kPi, tn, tw);
  KernelRule rule;
  rule.h = h;
  double total = 0.0;
  for (std::size_t i = 0; i < sn.size(); ++i) {
    const double rho = h * std::pow(sn[i], 0.25);
    for (std::size_t j = 0; j < vn.size(); ++j) {
      const double v = vn[j];
      const double psi = 0.25 * kPi * (3.0 * v - v * v * v);
      const double jac = 0.75 * kPi * (1.0 - v * v);
      for (std::size_t k = 0; k < tn.size(); ++k) {
        const double geo = sw[i] * vw[j] * jac * tw[k];
        const double w = geo * kernel_profile(sn[i]);
        rule.nodes.push_back(gauge_polar(rho, psi, tn[k] + kThetaOffset));
        rule.weights.push_back(w);
        total += w;
      }
    }
  }
  for (double& w : rule.weights) w /= total;
  return rule;
}

ScalarField mollify(const ScalarField& u, double h, int kernel_resolution) {
  const KernelRule rule = group_kernel_rule(h, kernel_resolution);
  const std::string name = "mollify(" + u.name() + "," + std::to_string(h) + ")";
  return u.is_smooth() ? mollify_smooth(u, rule, name) : mollify_values(u, rule, name);
}

MeasureEstimate h_measure_continuous(const ScalarField& u, const Region& region,
                                     const std::vector<double>& h_sequence,
                                     const QuadratureSpec& spec, int kernel_resolution) {
  if (h_sequence.size() < 2) {
    throw std::invalid_argument("h_measure_continuous: need at least two mollification widths");
  }
  for (std::size_t i = 0; i < h_sequence.size(); ++i) {
    if (!(h_sequence[i] > 0.0) || (i > 0 && !(h_sequence[i] < h_sequence[i - 1]))) {
      throw std::invalid_argument("h_measure_continuous: h_sequence must be strictly decreasing");
    }
  }
  // Margin: the largest kernel support around the region boundary must stay in u's domain.
  // Value-only fields are differenced with steps up to h / 4, so their reach is 1.25 h.
  const double reach = (u.is_smooth() ? 1.0 : 1.25) * h_sequence.front();
  const KernelRule widest = group_kernel_rule(h_sequence.front(), 4);
  for (const Point& b : region.boundary_samples(9, 16)) {
    for (const Point& eta : widest.nodes) {
      const Point far = compose(dilate(reach / gauge(eta), eta), b);
      if (!u.in_domain(compose(eta, b)) || !u.in_domain(far)) {
        throw std::invalid_argument("h_measure_continuous: insufficient margin around the region");
      }
    }
  }
  MeasureEstimate previous;
  MeasureEstimate last;
  for (std::size_t i = 0; i < h_sequence.size(); ++i) {
    previous = last;
    last = h_measure(mollify(u, h_sequence[i], kernel_resolution), region, spec);
  }
  last.error_indicator += std::abs(last.value - previous.value);
  return last;
}

WeakConvergenceReport weak_convergence_test(const std::vector<ScalarField>& sequence,
                                            const ScalarField& limit, const Density& test,
                                            const Region& support, const QuadratureSpec& spec,
                                            double tolerance) {
  WeakConvergenceReport report;
  report.tolerance = tolerance;
  report.limit = weighted_h_measure(limit, test, support, spec);
  for (const ScalarField& u : sequence) {
    report.terms.push_back(weighted_h_measure(u, test, support, spec));
    report.gaps.push_back(std::abs(report.terms.back().value - report.limit.value));
  }
  report.monotone = true;
  for (std::size_t i = 1; i < report.gaps.size(); ++i) {
    if (!(report.gaps[i] < report.gaps[i - 1])) report.monotone = false;
  }
  const double slack = report.terms.empty()
                           ? 0.0
                           : report.terms.back().error_indicator + report.limit.error_indicator;
  report.pass = report.monotone && !report.gaps.empty() && report.gaps.back() <= tolerance + slack;
  return report;
}

double ConstantEstimate::relative_gap() const noexcept {
  return std::abs(tensor.value - cylindrical) / std::abs(cylindrical);
}

ConstantEstimate unit_ball_volume(const QuadratureSpec& spec) {
  ConstantEstimate out;
  out.tensor = integrate([](const Point&) { return 1.0; }, Region::ball(origin, 1.0), spec);
  // Slice at horizontal radius s: |t| < sqrt(1 - s^4).
  out.cylindrical =
      2.0 * kPi * adaptive([](double s) { return 2.0 * s * std::sqrt(1.0 - s * s * s * s); }, 0.0, 1.0);
  return out;
}

ConstantEstimate cone_constant(const QuadratureSpec& spec) {
  ConstantEstimate out;
  const ScalarField cone = gauge_field() - 1.0;
  out.tensor = h_measure(cone, Region::ball(origin, 1.0), spec);
  // (d_t rho)^2 = t^2 / (4 (s^4 + t^2)^{3/2}); with t = s^2 sinh(w) the t-integral becomes
  // \int_0^T tanh^2(w) dw / 4 = (T - tanh T) / 4 with T = asinh(sqrt(1 - s^4) / s^2).
  const auto slice = [](double s) {
    // s T behaves like s ln(2 / s^2) and vanishes at 0.
    if (s <= 1e-100) return 0.0;
    const double top = std::asinh(std::sqrt(std::max(0.0, 1.0 - s * s * s * s)) / (s * s));
    return s * 2.0 * 0.25 * (top - std::tanh(top));
  };
  // The slice has square-root behaviour at s = 1, which tanh-sinh absorbs.
  boost::math::quadrature::tanh_sinh<double> rule;
  out.cylindrical = 12.0 * 2.0 * kPi * rule.integrate(slice, 0.0, 1.0);
  return out;
}

}  // namespace hma
