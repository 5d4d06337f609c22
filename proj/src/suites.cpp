#include "hma/suites.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "hma/barriers.hpp"
#include "hma/catalog.hpp"
#include "hma/chain.hpp"
#include "hma/horizontal.hpp"
#include "hma/parallel.hpp"

namespace hma {

namespace {

ScalarField field(const std::string& name) { return catalog_entry(name).field; }

ScalarField bowl() { return field("bowl"); }

/// rho(p)^4 about the origin.
ScalarField quartic() { return quartic_norm(); }

/// Scales a unit-ball point into B_R(0).
Point scaled(double R, const Point& p) { return dilate(R, p); }

struct Context {
  double R;
  QuadratureSpec spec;
  SampleConfig samples;
  Region ball;
};

Context context(const SuiteOptions& o) {
  SampleConfig s;
  s.seed = o.seed;
  return {o.R, QuadratureSpec::from_resolution(o.resolution), s, Region::ball(origin, o.R)};
}

std::vector<SuiteCase> integral_comparison(const Context& c, bool broken) {
  const double R4 = std::pow(c.R, 4);
  const ScalarField well = quartic() - R4;
  auto pair = [c, well](std::string label, ScalarField u, double mu) {
    const ScalarField v = (u + mu * well).renamed(u.name() + "+" + std::to_string(mu) + "(r-R^4)");
    return SuiteCase{std::move(label), [c, u, v] {
                       return verify_integral_comparison(u, v, c.ball, c.spec, c.samples);
                     }};
  };
  if (broken) {
    const ScalarField u = 4.0 * bowl();
    const ScalarField v = (u + 0.5 * well).renamed("4 bowl + 0.5(r-R^4)");
    return {{"swapped_roles",
             [c, u, v] { return verify_integral_comparison(v, u, c.ball, c.spec, c.samples); }}};
  }
  const ScalarField same = field("bowl_t2");
  return {
      pair("bowl_plus_well", (4.0 * bowl()).renamed("4 bowl"), 0.5),
      pair("exp_r_plus_well", field("exp_r"), 0.3),
      pair("bowl_r_t_plus_well", field("bowl_r_t"), 1.0),
      pair("barrier_plus_well", quartic_barrier(c.R, 0.5, -1.0), 0.2),
      pair("translated_r_plus_well", field("translated_r"), 0.5),
      {"equality", [c, same] { return verify_integral_comparison(same, same, c.ball, c.spec, c.samples); }},
  };
}

HorizontalHessian identity(const Point&) { return {1.0, 0.0, 1.0}; }

std::vector<SuiteCase> weak_maximum(const Context& c, bool broken) {
  const double R = c.R;
  const double R4 = std::pow(R, 4);
  if (broken) {
    // M - e^{lx} - e^{ly} with M = 2 e^{-lR}, so w <= 0 on the sphere but Lw < 0.
    const double lambda = 1.5;
    const ScalarField barrier = exp_barrier(lambda, 2.0 * std::exp(-lambda * R));
    const ScalarField lifted = bowl() - R * R;
    const CoefficientField indefinite = [](const Point&) { return HorizontalHessian{1.0, 2.0, 1.0}; };
    return {
        {"exp_barrier", [c, barrier] { return verify_weak_maximum(identity, barrier, c.ball, c.samples); }},
        {"indefinite_coefficients",
         [c, lifted, indefinite] { return verify_weak_maximum(indefinite, lifted, c.ball, c.samples); }},
    };
  }
  const ScalarField lifted = (bowl() - R * R).renamed("bowl-R^2");
  const ScalarField well = (quartic() - R4).renamed("r-R^4");
  const ScalarField exp_well = (field("exp_r") - std::exp(R4)).renamed("exp_r-e^{R^4}");
  const ScalarField quartic_xy = (field("quartic_xy") - R4).renamed("quartic_xy-R^4");
  // 2(x^2 + y^2) + t peaks at sqrt(5) R^2 on the sphere.
  const ScalarField tilted = (2.0 * bowl() + coordinate_t() - std::sqrt(5.0) * R * R).renamed("2 bowl+t-sqrt5 R^2");
  const double lambda = 1.3;
  const double half = 0.5 * R;
  const ScalarField ramp = ScalarField::expression("e^{1.3x}-e^{1.3 a}", [lambda, half](auto x, auto, auto) {
    return exp(lambda * x) - std::exp(lambda * half);
  });
  const Region box = Region::box(Point{-half, -half, -0.3 * R * R}, Point{half, half, 0.3 * R * R});
  const CoefficientField constant = [](const Point&) { return HorizontalHessian{2.0, 0.5, 1.0}; };
  const CoefficientField rank_one = [](const Point& p) {
    return HorizontalHessian{1.0 + p.x * p.x, p.x * p.y, 1.0 + p.y * p.y};
  };
  const CoefficientField degenerate = [](const Point&) { return HorizontalHessian{1.0, 0.0, 0.0}; };
  const CoefficientField oscillating = [](const Point& p) {
    return HorizontalHessian{1.0, 0.3 * std::sin(p.t), 1.0};
  };
  return {
      {"identity_bowl", [c, lifted] { return verify_weak_maximum(identity, lifted, c.ball, c.samples); }},
      {"constant_psd_quartic",
       [c, well, constant] { return verify_weak_maximum(constant, well, c.ball, c.samples); }},
      {"identity_plus_rank_one_exp",
       [c, exp_well, rank_one] { return verify_weak_maximum(rank_one, exp_well, c.ball, c.samples); }},
      {"degenerate_quartic_xy",
       [c, quartic_xy, degenerate] { return verify_weak_maximum(degenerate, quartic_xy, c.ball, c.samples); }},
      {"oscillating_tilted",
       [c, tilted, oscillating] { return verify_weak_maximum(oscillating, tilted, c.ball, c.samples); }},
      {"box_exponential", [c, ramp, box] { return verify_weak_maximum(identity, ramp, box, c.samples); }},
  };
}

std::vector<SuiteCase> pointwise_comparison(const Context& c, bool broken) {
  const double R = c.R;
  const double R4 = std::pow(R, 4);
  auto make = [c](std::string label, ScalarField u, ScalarField v) {
    return SuiteCase{std::move(label),
                     [c, u, v] { return verify_pointwise_comparison(u, v, c.ball, c.samples); }};
  };
  if (broken) {
    return {make("det_reversed", (bowl() - R * R).renamed("bowl-R^2"),
                 (2.0 * bowl() - R * R).renamed("2 bowl-R^2"))};
  }
  const ScalarField well = (quartic() - R4).renamed("r-R^4");
  const ScalarField smooth_v = (bowl() + quartic()).renamed("bowl+r");
  const double m = 1.0;
  const double eps = 0.1;
  const ScalarField cone = gauge_cone(origin, R, m).renamed("cone");
  const ScalarField below_cone = (eps * bowl() - (m + eps * R * R)).renamed("eps bowl - m - eps R^2");
  const ScalarField exp_well = (field("exp_r") - std::exp(R4)).renamed("exp_r-e^{R^4}");
  const ScalarField bowl_r_t = field("bowl_r_t");
  const ScalarField barrier = quartic_barrier(R, 0.5, -1.0);
  return {
      make("shifted_down", (smooth_v - 0.5).renamed("bowl+r-0.5"), smooth_v),
      make("below_cone", below_cone, cone),
      make("doubled_well", (2.0 * well).renamed("2(r-R^4)"), well),
      make("perturbed_exp", (epsilon_perturb(exp_well, eps) - eps * R * R).renamed("exp_well+eps(bowl-R^2)"),
           exp_well),
      make("bowl_r_t_plus_well", (bowl_r_t + 0.2 * well).renamed("bowl_r_t+0.2(r-R^4)"), bowl_r_t),
      make("scaled_barrier", (1.5 * barrier).renamed("1.5 barrier"), barrier),
  };
}

std::vector<SuiteCase> perforated_comparison(const Context& c, bool broken) {
  const double R = c.R;
  const double R4 = std::pow(R, 4);
  const std::vector<double> eps{0.2 * R, 0.1 * R, 0.05 * R};
  auto make = [c, eps](std::string label, ScalarField v) {
    return SuiteCase{std::move(label),
                     [c, v, eps] { return verify_perforated_comparison(v, c.ball, c.spec, eps, c.samples); }};
  };
  const ScalarField well = (quartic() - R4).renamed("r-R^4");
  if (broken) return {make("lifted_well", (well + 0.5).renamed("r-R^4+0.5"))};
  const ScalarField r2 = field("r_squared");
  return {
      make("quartic_barrier", quartic_barrier(R, 0.5, -1.0)),
      make("quartic_well", well),
      make("exp_well", (field("exp_r") - std::exp(R4)).renamed("exp_r-e^{R^4}")),
      make("squared_well", (r2 - R4 * R4).renamed("r^2-R^8")),
      make("mixed_well", (quartic() + r2 - (R4 + R4 * R4)).renamed("r+r^2-R^4-R^8")),
      make("cone", gauge_cone(origin, R, 1.0).renamed("cone")),
  };
}

std::vector<SuiteCase> chain_inequalities(const Context& c, bool broken) {
  const double R = c.R;
  const double R4 = std::pow(R, 4);
  auto make = [c](std::string label, ScalarField u, Point start) {
    return SuiteCase{std::move(label), [c, u, start] {
                       return verify_chain_inequalities(u, build_chain(start, c.R), c.samples);
                     }};
  };
  const ScalarField well = (quartic() - R4).renamed("r-R^4");
  if (broken) return {make("lifted_well", (well + 0.3).renamed("r-R^4+0.3"), scaled(R, {0.1, 0.2, 0.05}))};
  return {
      make("well_near", well, scaled(R, {0.1, 0.2, 0.05})),
      make("cone_far", (gauge_field() - R).renamed("gauge-R"), scaled(R, {0.05, -0.1, 0.7})),
      make("zero_near", constant_field(0.0).renamed("zero"), scaled(R, {0.3, -0.1, 0.1})),
      make("barrier_far_negative", quartic_barrier(R, 0.5, -1.0), scaled(R, {-0.1, 0.0, -0.85})),
      make("exp_well_far", (field("exp_r") - std::exp(R4)).renamed("exp_r-e^{R^4}"), scaled(R, {0.0, 0.0, 0.95})),
      make("squared_well_near_negative", (field("r_squared") - R4 * R4).renamed("r^2-R^8"),
           scaled(R, {0.2, 0.1, -0.1})),
  };
}

std::vector<SuiteCase> abp(const Context& c, bool broken) {
  const double R = c.R;
  const double R4 = std::pow(R, 4);
  auto make = [c](std::string label, ScalarField u) {
    return SuiteCase{std::move(label), [c, u] { return verify_abp(u, c.R, c.spec, c.samples); }};
  };
  const ScalarField well = (quartic() - R4).renamed("r-R^4");
  if (broken) return {make("lifted_well", (well + 0.3).renamed("r-R^4+0.3"))};
  const ScalarField squared = (field("r_squared") - R4 * R4).renamed("r^2-R^8");
  return {
      make("quartic_well", well),
      make("quartic_barrier", quartic_barrier(R, 0.5, -1.0)),
      make("zero", constant_field(0.0).renamed("zero")),
      make("exp_well", (field("exp_r") - std::exp(R4)).renamed("exp_r-e^{R^4}")),
      make("squared_well", squared),
      make("mixed_well", (0.5 * well + squared).renamed("0.5(r-R^4)+r^2-R^8")),
  };
}

std::vector<SuiteCase> nonpositivity(const Context& c, bool broken) {
  const double R = c.R;
  const double R4 = std::pow(R, 4);
  auto make = [c](std::string label, ScalarField u, Region region) {
    return SuiteCase{std::move(label),
                     [c, u, region] { return verify_nonpositivity(u, region, c.samples); }};
  };
  if (broken) {
    return {
        make("concave", field("neg_bowl"), c.ball),
        make("lifted_bowl", (bowl() - R * R + 0.5).renamed("bowl-R^2+0.5"), c.ball),
    };
  }
  // Boundary maxima below are analytic: rho(eta o p) <= rho(eta) + R on B_R(0), and
  // x^2 + y^2 <= (|c_h| + R)^2 on B_R(c).
  const Point eta{0.2, -0.1, 0.05};
  const double reach = gauge(eta) + R;
  const Point off{0.3, -0.2, 0.1};
  const double horizontal = std::hypot(off.x, off.y) + R;
  const double half = 0.5 * R;
  const Region box = Region::box(Point{-half, -half, -0.3 * R * R}, Point{half, half, 0.3 * R * R});
  return {
      make("bowl", (bowl() - R * R).renamed("bowl-R^2"), c.ball),
      make("cone", (gauge_field() - R).renamed("gauge-R"), c.ball),
      make("translated_r", (field("translated_r") - std::pow(reach, 4)).renamed("translated_r-max"), c.ball),
      make("box_exp_sum", (field("exp_sum") - (std::exp(0.7 * half) + std::exp(0.5 * half))).renamed("exp_sum-max"),
           box),
      make("annulus_well", (quartic() - R4).renamed("r-R^4"), Region::annulus(origin, 0.4 * R, R)),
      make("offset_bowl", (bowl() - horizontal * horizontal).renamed("bowl-max"), Region::ball(off, R)),
  };
}

std::vector<SuiteCase> measure_comparison(const Context& c, bool broken) {
  const double R = c.R;
  const double R4 = std::pow(R, 4);
  auto make = [c](std::string label, ScalarField u, ScalarField v) {
    return SuiteCase{std::move(label),
                     [c, u, v] { return verify_measure_comparison(u, v, c.ball, c.spec, {0.1, 0.05}, c.samples); }};
  };
  if (broken) {
    const ScalarField w = (bowl() + 1.0).renamed("bowl+1");
    return {make("scaled_up", (1.2 * w).renamed("1.2(bowl+1)"), w)};
  }
  const ScalarField well = (quartic() - R4).renamed("r-R^4");
  const ScalarField exp_well = (field("exp_r") - std::exp(R4)).renamed("exp_r-e^{R^4}");
  const ScalarField bowl_r_t = field("bowl_r_t");
  const ScalarField tilted = (bowl() + coordinate_t()).renamed("bowl+t");
  const ScalarField barrier = quartic_barrier(R, 0.5, -1.0);
  return {
      make("constant_gap", bowl_r_t, (bowl_r_t + 0.5).renamed("bowl_r_t+0.5")),
      make("perturbed_well", (epsilon_perturb(well, 0.1) - 0.1 * R * R).renamed("well+0.1(bowl-R^2)"), well),
      make("doubled_well", (2.0 * well).renamed("2(r-R^4)"), well),
      make("exp_plus_well", (exp_well + 0.3 * well).renamed("exp_well+0.3 well"), exp_well),
      make("doubled_barrier", quartic_barrier(R, 0.5, -2.0), barrier),
      make("tilted_shift", (tilted - 0.1).renamed("bowl+t-0.1"), tilted),
  };
}

std::vector<SuiteCase> oscillation(const Context& c, bool broken) {
  const auto constants = std::make_shared<OscillationConstants>(oscillation_constants(c.R, 0.5, c.spec));
  auto make = [c, constants](std::string label, ScalarField u) {
    return SuiteCase{std::move(label),
                     [c, u, constants] { return verify_oscillation(u, origin, *constants, c.spec, c.samples); }};
  };
  if (broken) return {make("concave", field("neg_bowl"))};
  std::vector<SuiteCase> out;
  for (const CatalogEntry& e : h_convex_catalog()) out.push_back(make(e.name, e.field));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"comparison", "weak-max",   "pointwise",
                                              "perforated", "nonpos",     "chain-ineq",
                                              "abp",        "oscillation", "measure-comparison"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<SuiteCase> suite_cases(const std::string& suite, const SuiteOptions& options) {
  if (!(options.R > 0.0)) throw std::invalid_argument("suite R must be positive");
  const Context c = context(options);
  const bool b = options.broken;
  if (suite == "comparison") return integral_comparison(c, b);
  if (suite == "weak-max") return weak_maximum(c, b);
  if (suite == "pointwise") return pointwise_comparison(c, b);
  if (suite == "perforated") return perforated_comparison(c, b);
  if (suite == "nonpos") return nonpositivity(c, b);
  if (suite == "chain-ineq") return chain_inequalities(c, b);
  if (suite == "abp") return abp(c, b);
  if (suite == "oscillation") return oscillation(c, b);
  if (suite == "measure-comparison") return measure_comparison(c, b);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

SuiteRun run_suite(const std::string& suite, const SuiteOptions& options) {
  const std::vector<SuiteCase> cases = suite_cases(suite, options);
  SuiteRun run;
  run.suite = suite;
  run.reports.resize(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) { run.reports[i] = cases[i].run(); });
  for (const SuiteCase& c : cases) run.labels.push_back(c.label);
  return run;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  bool hypothesis = false;
  for (const VerificationReport& r : reports) {
    if (r.status == Status::conclusion_failed) return 3;
    if (r.status == Status::hypothesis_failed) hypothesis = true;
  }
  return hypothesis ? 2 : 0;
}

}  // namespace hma
