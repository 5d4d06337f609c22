#include "hma/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hma/horizontal.hpp"

namespace hma {

namespace {

constexpr int kLambdaSteps = 8;

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::convex:
      return "convex";
    case Verdict::not_convex:
      return "not_convex";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

ConvexityReport check_psd(const ScalarField& u, const Region& region, std::size_t samples,
                          double tol, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("check_psd: region sample is empty");
  ConvexityReport report;
  double worst_score = std::numeric_limits<double>::infinity();
  bool failed = false;
  for (const Point& p : interior_samples(region, samples, seed)) {
    if (!u.in_domain(p)) continue;
    const HorizontalHessian h = horizontal_hessian(u, p);
    const double lo = h.min_eigenvalue();
    const double scale = 1.0 + std::abs(h.max_eigenvalue());
    ++report.evaluated;
    if (!report.min_eigenvalue_seen || lo < *report.min_eigenvalue_seen) {
      report.min_eigenvalue_seen = lo;
    }
    const double score = lo / scale;
    if (score < worst_score) {
      worst_score = score;
      report.worst_point = p;
    }
    if (lo < -tol * scale) failed = true;
  }
  if (report.evaluated == 0) return report;
  report.verdict = failed ? Verdict::not_convex : Verdict::convex;
  return report;
}

ConvexityReport check_group_segments(const ScalarField& u, const Region& region,
                                     std::size_t samples, double tol, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("check_group_segments: region sample is empty");
  ConvexityReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double disk = 0.5 * region.inradius();
  // Oversample bases so that rejected segments can be replaced.
  const std::vector<Point> bases = interior_samples(region, 4 * samples, seed ^ 0x9e3779b97f4a7c15ULL);
  bool failed = false;
  double worst_score = -std::numeric_limits<double>::infinity();
  for (const Point& base : bases) {
    if (report.evaluated == samples) break;
    const double r = disk * std::sqrt(unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const Point target = compose(base, Point{r * std::cos(phi), r * std::sin(phi), 0.0});
    std::array<Point, kLambdaSteps + 1> path{};
    bool inside = true;
    for (int k = 0; k <= kLambdaSteps && inside; ++k) {
      path[k] = group_segment(base, target, static_cast<double>(k) / kLambdaSteps);
      inside = region.contains(path[k]) && u.in_domain(path[k]);
    }
    if (!inside) continue;
    ++report.evaluated;
    const double u0 = u(base);
    const double u1 = u(target);
    const double scale = 1.0 + std::abs(u0) + std::abs(u1);
    for (int k = 1; k < kLambdaSteps; ++k) {
      const double lambda = static_cast<double>(k) / kLambdaSteps;
      const double excess = u(path[k]) - (u0 + lambda * (u1 - u0));
      if (!report.segment_violation || excess > *report.segment_violation) {
        report.segment_violation = excess;
      }
      if (excess / scale > worst_score) {
        worst_score = excess / scale;
        report.worst_point = path[k];
      }
      if (excess > tol * scale) failed = true;
    }
  }
  if (report.evaluated == 0) return report;
  report.verdict = failed ? Verdict::not_convex : Verdict::convex;
  return report;
}

ScalarField convex_compose(const BivariateProfile& f, const ScalarField& u1,
                           const ScalarField& u2) {
  const std::string name = f.name + "(" + u1.name() + "," + u2.name() + ")";
  auto value = [f, u1, u2](const Point& p) { return f.value(u1(p), u2(p)); };
  auto domain = [u1, u2](const Point& p) { return u1.in_domain(p) && u2.in_domain(p); };
  if (!f.jet || !u1.is_smooth() || !u2.is_smooth()) {
    return ScalarField::continuous(name, value, domain);
  }
  auto jet = [f, u1, u2](const Point& p) {
    const Jet2 a = u1.jet(p);
    const Jet2 b = u2.jet(p);
    return chain2(a, b, f.jet(a.value, b.value));
  };
  return ScalarField::smooth(name, value, jet, domain);
}

LipschitzReport lipschitz_check(const ScalarField& u, const Point& center, double R,
                                std::size_t pairs, double slack, std::uint64_t seed) {
  if (!(R > 0.0)) throw std::invalid_argument("lipschitz_check: R must be positive");
  if (pairs == 0) throw std::invalid_argument("lipschitz_check: no sample pairs");
  const Region outer = Region::ball(center, 2.0 * R);
  std::vector<Point> probe = interior_samples(outer, 4096, seed);
  const std::vector<Point> rim = outer.boundary_samples(33, 64);
  probe.insert(probe.end(), rim.begin(), rim.end());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point& p : probe) {
    if (!u.in_domain(p)) throw std::invalid_argument("lipschitz_check: domain too small");
    const double v = u(p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  LipschitzReport report;
  report.slack = slack;
  report.bound = (hi - lo) / R;
  const std::vector<Point> inner = interior_samples(Region::ball(center, 0.25 * R), 2 * pairs, seed + 1);
  for (std::size_t i = 0; i + 1 < inner.size(); i += 2) {
    const double d = distance(inner[i], inner[i + 1]);
    if (d <= 0.0) continue;
    report.max_ratio = std::max(report.max_ratio, std::abs(u(inner[i]) - u(inner[i + 1])) / d);
  }
  report.pass = report.max_ratio <= slack * report.bound + 1e-12;
  return report;
}

}  // namespace hma
