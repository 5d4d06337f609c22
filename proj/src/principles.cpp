#include "hma/principles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

#include "hma/barriers.hpp"
#include "hma/convexity.hpp"
#include "hma/measure.hpp"

namespace hma {

namespace {

constexpr double kPsdTolerance = 1e-8;
constexpr double kRelativeFloor = 1e-12;

/// Accumulates named checks into a report and tracks the status.
class Recorder {
 public:
  Recorder(VerificationReport& report, std::string principle, std::string instance)
      : r_(report) {
    r_.principle = std::move(principle);
    r_.instance = std::move(instance);
  }

  bool hypothesis(const std::string& name, bool ok, double worst) {
    r_.checks.push_back({name, true, ok, worst});
    if (!ok && r_.status == Status::pass) {
      r_.status = Status::hypothesis_failed;
      r_.failed_check = name;
    }
    return ok;
  }

  bool conclusion(const std::string& name, bool ok, double worst) {
    r_.checks.push_back({name, false, ok, worst});
    if (!ok && r_.status == Status::pass) {
      r_.status = Status::conclusion_failed;
      r_.failed_check = name;
    }
    return ok;
  }

  bool failed() const { return r_.status != Status::pass; }

  void detail(const std::string& name, double value) { r_.details.emplace_back(name, value); }

  void set_sides(double lhs, double rhs, double quadrature_error) {
    r_.lhs = lhs;
    r_.rhs = rhs;
    r_.margin = rhs - lhs;
    r_.quadrature_error = quadrature_error;
  }

 private:
  VerificationReport& r_;
};

/// a - b minus the relative tolerance; <= 0 means a <= b holds.
double excess(double a, double b, double tol) {
  return (a - b) - tol * (1.0 + std::abs(a) + std::abs(b));
}

std::vector<Point> inside(const Region& region, const SampleConfig& s) {
  return interior_samples(region, s.interior, s.seed);
}

std::vector<Point> rim(const Region& region, const SampleConfig& s) {
  return region.boundary_samples(s.boundary_levels, s.boundary_angles);
}

/// Largest value of excess(f(p), g(p)) over the points; -inf for an empty set.
template <class F, class G>
double worst_excess(const std::vector<Point>& points, F f, G g, double tol) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const Point& p : points) worst = std::max(worst, excess(f(p), g(p), tol));
  return worst;
}

bool h_convex_on(const ScalarField& u, const Region& region, const SampleConfig& s,
                 double* min_eigenvalue) {
  if (u.is_smooth()) {
    const ConvexityReport c = check_psd(u, region, s.interior, kPsdTolerance, s.seed);
    if (min_eigenvalue) *min_eigenvalue = c.min_eigenvalue_seen.value_or(0.0);
    return c.verdict == Verdict::convex;
  }
  const ConvexityReport c = check_group_segments(u, region, s.interior / 4 + 1, kPsdTolerance, s.seed);
  if (min_eigenvalue) *min_eigenvalue = -c.segment_violation.value_or(0.0);
  return c.verdict == Verdict::convex;
}

const BallRegion& require_ball(const Region& region, const char* who) {
  const auto* b = std::get_if<BallRegion>(&region.shape());
  if (!b) throw std::invalid_argument(std::string(who) + ": region must be a gauge ball");
  return *b;
}

double quadrature_slack(const MeasureEstimate& a, const MeasureEstimate& b) {
  return a.error_indicator + b.error_indicator +
         kRelativeFloor * (std::abs(a.value) + std::abs(b.value));
}

/// Aitken extrapolation of the last three terms; falls back to the last term when the
/// second difference vanishes.
double aitken(const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n < 3) return v.back();
  const double a = v[n - 3];
  const double b = v[n - 2];
  const double c = v[n - 1];
  const double second = (c - b) - (b - a);
  if (std::abs(second) <= 1e-14 * (std::abs(a) + std::abs(b) + std::abs(c))) return c;
  return c - (c - b) * (c - b) / second;
}

/// Measured c1, cached per quadrature resolution.
double measured_c1(const QuadratureSpec& spec, double* indicator) {
  const ConstantEstimate c = cone_constant(spec);
  if (indicator) *indicator = c.tensor.error_indicator;
  return c.tensor.value;
}

MeasureEstimate measure_of(const ScalarField& u, const Region& region, const QuadratureSpec& spec,
                           const std::vector<double>& h_sequence) {
  if (u.is_smooth()) return h_measure(u, region, spec);
  return h_measure_continuous(u, region, h_sequence, spec);
}

}  // namespace

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::hypothesis_failed:
      return "hypothesis_failed";
    case Status::conclusion_failed:
      break;
  }
  return "conclusion_failed";
}

VerificationReport verify_integral_comparison(const ScalarField& u, const ScalarField& v,
                                              const Region& region, const QuadratureSpec& spec,
                                              const SampleConfig& s) {
  VerificationReport report;
  Recorder rec(report, "integral_comparison", u.name() + " vs " + v.name());
  double min_eig = 0.0;
  rec.hypothesis("sum_h_convex", h_convex_on(u + v, region, s, &min_eig), min_eig);
  if (rec.failed()) return report;
  const auto boundary = rim(region, s);
  const double gap = worst_excess(
      boundary, [&](const Point& p) { return std::abs(u(p) - v(p)); },
      [](const Point&) { return 0.0; }, s.tol);
  if (!rec.hypothesis("boundary_equal", gap <= 0.0, gap)) return report;
  const auto interior = inside(region, s);
  const double below = worst_excess(interior, v, u, s.tol);
  if (!rec.hypothesis("v_below_u", below <= 0.0, below)) return report;

  const MeasureEstimate mu = h_measure(u, region, spec);
  const MeasureEstimate mv = h_measure(v, region, spec);
  const double slack = quadrature_slack(mu, mv);
  rec.set_sides(mu.value, mv.value, slack);
  rec.conclusion("ma_integral", mv.value - mu.value >= -slack, mu.value - mv.value);
  const MeasureEstimate tu = trace_integral(u, region, spec);
  const MeasureEstimate tv = trace_integral(v, region, spec);
  rec.detail("trace_lhs", tu.value);
  rec.detail("trace_rhs", tv.value);
  rec.conclusion("trace_integral", tv.value - tu.value >= -quadrature_slack(tu, tv),
                 tu.value - tv.value);
  return report;
}

VerificationReport verify_weak_maximum(const CoefficientField& a, const ScalarField& w,
                                       const Region& region, const SampleConfig& s) {
  VerificationReport report;
  Recorder rec(report, "weak_maximum", w.name());
  const auto interior = inside(region, s);
  double worst_psd = std::numeric_limits<double>::infinity();
  bool psd = true;
  for (const Point& p : interior) {
    const HorizontalHessian m = a(p);
    const double lo = m.min_eigenvalue();
    worst_psd = std::min(worst_psd, lo);
    if (lo < -kPsdTolerance * (1.0 + std::abs(m.max_eigenvalue())) || !(m.trace() > 0.0)) psd = false;
  }
  if (!rec.hypothesis("coefficients_psd", psd, worst_psd)) return report;
  double worst_l = std::numeric_limits<double>::infinity();
  bool l_ok = true;
  for (const Point& p : interior) {
    if (!w.in_domain(p)) continue;
    const HorizontalHessian h = horizontal_hessian(w, p);
    const HorizontalHessian m = a(p);
    const double lw = trace_product(m, h);
    const double scale = 1.0 + std::abs(m.h11 * h.h11) + 2.0 * std::abs(m.h12 * h.h12) +
                         std::abs(m.h22 * h.h22);
    worst_l = std::min(worst_l, lw);
    if (lw < -s.tol * scale) l_ok = false;
  }
  if (!rec.hypothesis("Lw_nonneg", l_ok, worst_l)) return report;
  const double edge = worst_excess(rim(region, s), w, [](const Point&) { return 0.0; }, s.tol);
  if (!rec.hypothesis("boundary_nonpositive", edge <= 0.0, edge)) return report;

  double top = -std::numeric_limits<double>::infinity();
  for (const Point& p : interior) top = std::max(top, w(p));
  rec.set_sides(top, 0.0, 0.0);
  rec.conclusion("interior_nonpositive", excess(top, 0.0, s.tol) <= 0.0, top);
  return report;
}

VerificationReport verify_pointwise_comparison(const ScalarField& u, const ScalarField& v,
                                               const Region& region, const SampleConfig& s) {
  VerificationReport report;
  Recorder rec(report, "pointwise_comparison", u.name() + " vs " + v.name());
  const ScalarField sum = u + v;
  double min_eig = 0.0;
  if (!rec.hypothesis("sum_h_convex", h_convex_on(sum, region, s, &min_eig), min_eig)) return report;
  const auto interior = inside(region, s);
  double min_trace = std::numeric_limits<double>::infinity();
  double worst_det = -std::numeric_limits<double>::infinity();
  for (const Point& p : interior) {
    if (!sum.in_domain(p)) continue;
    min_trace = std::min(min_trace, horizontal_hessian(sum, p).trace());
  }
  if (!rec.hypothesis("trace_positive", min_trace > 0.0, min_trace)) return report;
  for (const Point& p : interior) {
    if (!sum.in_domain(p)) continue;
    worst_det = std::max(worst_det, excess(horizontal_hessian(v, p).det(),
                                           horizontal_hessian(u, p).det(), s.tol));
  }
  if (!rec.hypothesis("det_dominance", worst_det <= 0.0, worst_det)) return report;
  const double edge = worst_excess(rim(region, s), u, v, s.tol);
  if (!rec.hypothesis("boundary_order", edge <= 0.0, edge)) return report;

  double top = -std::numeric_limits<double>::infinity();
  for (const Point& p : interior) top = std::max(top, u(p) - v(p));
  rec.set_sides(top, 0.0, 0.0);
  rec.conclusion("u_below_v", worst_excess(interior, u, v, s.tol) <= 0.0, top);
  return report;
}

VerificationReport verify_perforated_comparison(const ScalarField& v, const Region& ball,
                                                const QuadratureSpec& spec,
                                                const std::vector<double>& eps_sequence,
                                                const SampleConfig& s) {
  const BallRegion& b = require_ball(ball, "verify_perforated_comparison");
  if (eps_sequence.empty()) throw std::invalid_argument("verify_perforated_comparison: no eps");
  for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
    if (!(eps_sequence[i] > 0.0) || (i > 0 && !(eps_sequence[i] < eps_sequence[i - 1]))) {
      throw std::invalid_argument("verify_perforated_comparison: eps must decrease strictly");
    }
  }
  VerificationReport report;
  Recorder rec(report, "perforated_comparison", v.name());
  const double edge = worst_excess(
      rim(ball, s), [&](const Point& p) { return std::abs(v(p)); },
      [](const Point&) { return 0.0; }, s.tol);
  if (!rec.hypothesis("boundary_zero", edge <= 0.0, edge)) return report;
  double min_eig = 0.0;
  if (!rec.hypothesis("v_h_convex", h_convex_on(v, ball, s, &min_eig), min_eig)) return report;
  const double m = -v(b.center);
  if (!rec.hypothesis("center_nonpositive", m >= 0.0, -m)) return report;

  const ScalarField cone = gauge_cone(b.center, b.radius, m);
  std::vector<double> cone_side;
  std::vector<double> v_side;
  double indicator = 0.0;
  for (double eps : eps_sequence) {
    QuadratureSpec local = spec;
    local.singular_exclusion = eps;
    const MeasureEstimate cu = h_measure(cone, ball, local);
    const MeasureEstimate cv = h_measure(v, ball, local);
    cone_side.push_back(cu.value);
    v_side.push_back(cv.value);
    indicator = std::max({indicator, cu.error_indicator, cv.error_indicator});
    rec.detail("cone_eps_" + std::to_string(eps), cu.value);
    rec.detail("v_eps_" + std::to_string(eps), cv.value);
  }
  const double lhs = aitken(cone_side);
  const double rhs = aitken(v_side);
  const double err = 3.0 * indicator + kRelativeFloor * (std::abs(lhs) + std::abs(rhs));
  rec.set_sides(lhs, rhs, err);
  rec.conclusion("cone_below_v", rhs - lhs >= -err, lhs - rhs);

  double c1_indicator = 0.0;
  const double c1 = measured_c1(spec, &c1_indicator);
  const double expected = c1 * m * m;
  const double cone_err = 3.0 * indicator + m * m * c1_indicator + kRelativeFloor * std::abs(expected);
  rec.detail("m", m);
  rec.detail("c1", c1);
  rec.detail("c1_m2", expected);
  rec.detail("cone_error_indicator", cone_err);
  rec.conclusion("cone_matches_c1", std::abs(lhs - expected) <= 2.0 * cone_err,
                 std::abs(lhs - expected));
  return report;
}

VerificationReport verify_chain_inequalities(const ScalarField& u, const ChainReport& chain,
                                             const SampleConfig& s) {
  VerificationReport report;
  Recorder rec(report, "chain_inequalities", u.name());
  const Region ball = Region::ball(origin, chain.R);
  const double edge = worst_excess(
      rim(ball, s), [&](const Point& p) { return std::abs(u(p)); },
      [](const Point&) { return 0.0; }, s.tol);
  if (!rec.hypothesis("boundary_zero", edge <= 0.0, edge)) return report;
  const auto interior = inside(ball, s);
  const double positive = worst_excess(interior, u, [](const Point&) { return 0.0; }, s.tol);
  if (!rec.hypothesis("nonpositive", positive <= 0.0, positive)) return report;
  double min_eig = 0.0;
  if (!rec.hypothesis("h_convex", h_convex_on(u, ball, s, &min_eig), min_eig)) return report;

  double worst = -std::numeric_limits<double>::infinity();
  bool ok = true;
  for (const ChainStep& step : chain.steps) {
    const double next = u(step.to);
    const double bound = step.factor * u(step.from);
    worst = std::max(worst, next - bound);
    if (excess(next, bound, s.tol) > 0.0) ok = false;
  }
  if (chain.steps.empty()) worst = 0.0;
  rec.set_sides(worst, 0.0, 0.0);
  rec.conclusion("step_bounds", ok, worst);
  const double end = u(origin);
  const double bound = chain.total_factor * u(chain.start);
  rec.detail("u_center", end);
  rec.detail("total_bound", bound);
  rec.conclusion("end_to_end", excess(end, bound, s.tol) <= 0.0, end - bound);
  return report;
}

VerificationReport verify_abp(const ScalarField& u, double R, const QuadratureSpec& spec,
                              const SampleConfig& s) {
  VerificationReport report;
  Recorder rec(report, "abp", u.name());
  const Region ball = Region::ball(origin, R);
  const double edge = worst_excess(
      rim(ball, s), [&](const Point& p) { return std::abs(u(p)); },
      [](const Point&) { return 0.0; }, s.tol);
  if (!rec.hypothesis("boundary_zero", edge <= 0.0, edge)) return report;
  double min_eig = 0.0;
  if (!rec.hypothesis("h_convex", h_convex_on(u, ball, s, &min_eig), min_eig)) return report;

  Point xi0 = origin;
  double lowest = u(origin);
  for (const Point& p : inside(ball, s)) {
    const double value = u(p);
    if (value < lowest) {
      lowest = value;
      xi0 = p;
    }
  }
  const double m0 = -lowest;
  const double m = -u(origin);
  const ChainReport chain = build_chain(xi0, R);
  const double c2 = chain.total_factor;
  double c1_indicator = 0.0;
  const double c1 = measured_c1(spec, &c1_indicator);
  const MeasureEstimate mu = h_measure(u, ball, spec);
  rec.detail("m0", m0);
  rec.detail("m", m);
  rec.detail("c1", c1);
  rec.detail("c2", c2);
  rec.detail("h_measure", mu.value);
  rec.detail("xi0_x", xi0.x);
  rec.detail("xi0_y", xi0.y);
  rec.detail("xi0_t", xi0.t);
  rec.conclusion("chain_bound", excess(m0, m / c2, s.tol) <= 0.0, m0 - m / c2);

  const double scale = c1 / (c2 * c2);
  const double err = scale * (mu.error_indicator + kRelativeFloor * std::abs(mu.value)) +
                     c1_indicator / (c2 * c2) * std::abs(mu.value);
  rec.set_sides(m0 * m0, scale * mu.value, err);
  rec.conclusion("abp", scale * mu.value - m0 * m0 >= -err, m0 * m0 - scale * mu.value);
  // The sharper constant 1 / (c1 c2^2) follows from c1 m^2 <= mu and m0 <= m / c2.
  const double sharp = mu.value / (c1 * c2 * c2);
  const double sharp_err = err / (c1 * c1);
  rec.detail("sharp_rhs", sharp);
  rec.conclusion("abp_sharp", sharp - m0 * m0 >= -sharp_err - s.tol * (1.0 + sharp),
                 m0 * m0 - sharp);
  return report;
}

VerificationReport verify_nonpositivity(const ScalarField& u, const Region& region,
                                        const SampleConfig& s) {
  VerificationReport report;
  Recorder rec(report, "nonpositivity", u.name());
  double min_eig = 0.0;
  if (!rec.hypothesis("h_convex", h_convex_on(u, region, s, &min_eig), min_eig)) return report;
  const double edge = worst_excess(rim(region, s), u, [](const Point&) { return 0.0; }, s.tol);
  if (!rec.hypothesis("boundary_nonpositive", edge <= 0.0, edge)) return report;
  double top = -std::numeric_limits<double>::infinity();
  const auto interior = inside(region, s);
  for (const Point& p : interior) top = std::max(top, u(p));
  rec.set_sides(top, 0.0, 0.0);
  rec.conclusion("interior_nonpositive", excess(top, 0.0, s.tol) <= 0.0, top);
  return report;
}

std::vector<Region> measure_comparison_family(const Point& center, double R) {
  std::vector<Region> out{Region::ball(center, R / 2.0)};
  const double h = R / 2.0;
  const double v = R * R / 4.0;
  for (const Point& q : {Point{h, 0, 0}, Point{-h, 0, 0}, Point{0, h, 0}, Point{0, -h, 0},
                         Point{0, 0, v}, Point{0, 0, -v}}) {
    out.push_back(Region::ball(compose(center, q), R / 4.0));
  }
  return out;
}

VerificationReport verify_measure_comparison(const ScalarField& u, const ScalarField& v,
                                             const Region& ball, const QuadratureSpec& spec,
                                             const std::vector<double>& h_sequence,
                                             const SampleConfig& s) {
  const BallRegion& b = require_ball(ball, "verify_measure_comparison");
  VerificationReport report;
  Recorder rec(report, "measure_comparison", u.name() + " vs " + v.name());
  const double edge = worst_excess(rim(ball, s), u, v, s.tol);
  if (!rec.hypothesis("boundary_order", edge <= 0.0, edge)) return report;
  double worst = -std::numeric_limits<double>::infinity();
  bool dominated = true;
  const auto family = measure_comparison_family(b.center, b.radius);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const MeasureEstimate mu = measure_of(u, family[i], spec, h_sequence);
    const MeasureEstimate mv = measure_of(v, family[i], spec, h_sequence);
    rec.detail("mu_u_" + std::to_string(i), mu.value);
    rec.detail("mu_v_" + std::to_string(i), mv.value);
    worst = std::max(worst, mv.value - mu.value);
    if (mv.value - mu.value > quadrature_slack(mu, mv)) dominated = false;
  }
  if (!rec.hypothesis("measure_dominance", dominated, worst)) return report;
  const auto interior = inside(ball, s);
  double top = -std::numeric_limits<double>::infinity();
  for (const Point& p : interior) top = std::max(top, u(p) - v(p));
  rec.set_sides(top, 0.0, 0.0);
  rec.conclusion("u_below_v", worst_excess(interior, u, v, s.tol) <= 0.0, top);
  return report;
}

OscillationConstants oscillation_constants(double R, double sigma, const QuadratureSpec& spec) {
  OscillationConstants c;
  c.R = R;
  c.sigma = sigma;
  const ScalarField barrier = quartic_barrier(R, sigma, -1.0);
  const Region ball = Region::ball(origin, R);
  c.measure_constant = h_measure(barrier, ball, spec);
  c.trace_constant = trace_integral(barrier, ball, spec);
  c.trace_constant.value /= R * R;
  c.trace_constant.error_indicator /= R * R;
  return c;
}

VerificationReport verify_oscillation(const ScalarField& u, const Point& center,
                                      const OscillationConstants& constants,
                                      const QuadratureSpec& spec, const SampleConfig& s) {
  VerificationReport report;
  Recorder rec(report, "oscillation", u.name());
  const Region outer = Region::ball(center, constants.R);
  const Region inner = Region::ball(center, constants.sigma * constants.R);
  double min_eig = 0.0;
  if (!rec.hypothesis("h_convex", h_convex_on(u, outer, s, &min_eig), min_eig)) return report;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& set : {inside(outer, s), rim(outer, s)}) {
    for (const Point& p : set) {
      lo = std::min(lo, u(p));
      hi = std::max(hi, u(p));
    }
  }
  const double osc = hi - lo;
  const MeasureEstimate mu = h_measure(u, inner, spec);
  const double rhs = constants.measure_constant.value * osc * osc;
  const double err = mu.error_indicator + constants.measure_constant.error_indicator * osc * osc +
                     kRelativeFloor * (std::abs(mu.value) + rhs);
  rec.set_sides(mu.value, rhs, err);
  rec.detail("osc", osc);
  rec.detail("C", constants.measure_constant.value);
  rec.conclusion("measure_bound", rhs - mu.value >= -err, mu.value - rhs);
  const MeasureEstimate tr = trace_integral(u, inner, spec);
  const double trace_rhs = constants.trace_constant.value * constants.R * constants.R * osc;
  rec.detail("trace_lhs", tr.value);
  rec.detail("trace_rhs", trace_rhs);
  rec.detail("C_trace", constants.trace_constant.value);
  rec.conclusion("trace_bound",
                 trace_rhs - tr.value >= -(tr.error_indicator + kRelativeFloor * trace_rhs),
                 tr.value - trace_rhs);
  return report;
}

}  // namespace hma
