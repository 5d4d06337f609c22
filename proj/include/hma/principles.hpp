#pragma once

/// \file principles.hpp
/// Sampled and quadrature-based checks of the comparison, maximum, ABP and oscillation
/// principles for H-convex functions.
///
/// Every check first evaluates its hypotheses on samples. A failed hypothesis stops the
/// check with status hypothesis_failed and the name of the failed check; only a failed
/// conclusion under verified hypotheses yields conclusion_failed.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hma/chain.hpp"
#include "hma/field.hpp"
#include "hma/horizontal.hpp"
#include "hma/quadrature.hpp"
#include "hma/region.hpp"

namespace hma {

enum class Status { pass, hypothesis_failed, conclusion_failed };

const char* to_string(Status s) noexcept;

struct NamedCheck {
  std::string name;
  bool hypothesis = true;
  bool passed = false;
  /// The worst sampled quantity behind the check (its sign convention is check specific).
  double worst = 0.0;
};

struct VerificationReport {
  std::string principle;
  std::string instance;
  std::vector<NamedCheck> checks;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs.
  double margin = 0.0;
  double quadrature_error = 0.0;
  Status status = Status::pass;
  /// First failed check, empty on pass.
  std::string failed_check;
  /// Extra named quantities, in insertion order.
  std::vector<std::pair<std::string, double>> details;

  bool passed() const noexcept { return status == Status::pass; }
};

/// Sampling controls shared by all checks.
struct SampleConfig {
  std::size_t interior = 1500;
  std::size_t boundary_levels = 17;
  std::size_t boundary_angles = 32;
  /// Relative tolerance for sampled inequalities: a <= b passes when
  /// a - b <= tol * (1 + |a| + |b|).
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
};

/// Symmetric 2x2 coefficient field for L = sum a_ij X_i X_j.
using CoefficientField = std::function<HorizontalHessian(const Point&)>;

/// \int (det H(u) + 12 u_t^2) <= \int (det H(v) + 12 v_t^2) and the same for trace H, given
/// u + v H-convex, v = u on the boundary and v <= u inside.
VerificationReport verify_integral_comparison(const ScalarField& u, const ScalarField& v,
                                              const Region& region, const QuadratureSpec& spec,
                                              const SampleConfig& samples = {});

/// w <= 0 inside, given a PSD with positive trace, Lw >= 0 inside and w <= 0 on the boundary.
VerificationReport verify_weak_maximum(const CoefficientField& a, const ScalarField& w,
                                       const Region& region, const SampleConfig& samples = {});

/// u <= v inside, given u + v H-convex with positive trace, det H(u) >= det H(v) and
/// u <= v on the boundary.
VerificationReport verify_pointwise_comparison(const ScalarField& u, const ScalarField& v,
                                               const Region& region,
                                               const SampleConfig& samples = {});

/// For v H-convex vanishing on the sphere of `ball`, the cone u = m (d / R - 1) with
/// m = -v(center) has no more H-measure on the punctured ball than v. Both sides are
/// integrated over B_R minus B_eps for each eps and extrapolated to eps = 0; the cone
/// side is also compared with c1 m^2.
VerificationReport verify_perforated_comparison(const ScalarField& v, const Region& ball,
                                                const QuadratureSpec& spec,
                                                const std::vector<double>& eps_sequence,
                                                const SampleConfig& samples = {});

/// u(next) <= factor u(prev) along every chain step and u(0) <= total_factor u(start).
VerificationReport verify_chain_inequalities(const ScalarField& u, const ChainReport& chain,
                                             const SampleConfig& samples = {});

/// With -m0 the sampled minimum at xi0, m = -u(0) and c2 the chain factor from xi0:
/// m0 <= m / c2 and m0^2 <= (c1 / c2^2) \int_{B_R} (det H(u) + 12 u_t^2).
VerificationReport verify_abp(const ScalarField& u, double R, const QuadratureSpec& spec,
                              const SampleConfig& samples = {});

/// u <= 0 inside, given u H-convex and u <= 0 on the boundary.
VerificationReport verify_nonpositivity(const ScalarField& u, const Region& region,
                                        const SampleConfig& samples = {});

/// u <= v inside, given u <= v on the boundary and mu(u) >= mu(v) on a fixed family of
/// sub-balls (the ball of radius R/2 and six balls of radius R/4 about the points at
/// distance R/2 along +-x, +-y, +-t). Value-only fields are measured through
/// h_measure_continuous with `h_sequence`.
VerificationReport verify_measure_comparison(const ScalarField& u, const ScalarField& v,
                                             const Region& ball, const QuadratureSpec& spec,
                                             const std::vector<double>& h_sequence = {0.1, 0.05},
                                             const SampleConfig& samples = {});

/// The sub-ball family used by verify_measure_comparison.
std::vector<Region> measure_comparison_family(const Point& center, double R);

/// Constants of the oscillation bounds on B_{sigma R} inside B_R, obtained from the quartic
/// barrier with m0 = -1: its H-measure gives C in \int MA(u) <= C osc^2, and its trace
/// integral divided by R^2 gives C_tr in \int trace H(u) <= C_tr R^2 osc.
struct OscillationConstants {
  double sigma = 0.5;
  double R = 1.0;
  MeasureEstimate measure_constant;
  MeasureEstimate trace_constant;
};

OscillationConstants oscillation_constants(double R, double sigma, const QuadratureSpec& spec);

/// \int_{B_{sigma R}(c)} MA(u) <= C osc^2 and \int trace H(u) <= C_tr R^2 osc, with the
/// oscillation sampled over B_R(c).
VerificationReport verify_oscillation(const ScalarField& u, const Point& center,
                                      const OscillationConstants& constants,
                                      const QuadratureSpec& spec, const SampleConfig& samples = {});

}  // namespace hma
