#pragma once

/// \file measure.hpp
/// The H-measure mu(u)(E) = \int_E det H(u) + 12 u_t^2, group mollification and the
/// weak-convergence check, plus the measured constants |B_1| and c1 = 12 \int_{B_1} (d_t rho)^2.

#include <vector>

#include "hma/field.hpp"
#include "hma/quadrature.hpp"
#include "hma/region.hpp"

namespace hma {

/// \int_region (det H(u) + 12 u_t^2). Derivative failures of u propagate.
MeasureEstimate h_measure(const ScalarField& u, const Region& region, const QuadratureSpec& spec);

/// \int_region weight * (det H(u) + 12 u_t^2).
MeasureEstimate weighted_h_measure(const ScalarField& u, const Density& weight,
                                   const Region& region, const QuadratureSpec& spec);

/// \int_region trace H(u).
MeasureEstimate trace_integral(const ScalarField& u, const Region& region,
                               const QuadratureSpec& spec);

/// Nodes eta_i of the gauge ball B_h(0) with normalized weights w_i proportional to
/// k(rho(eta)^4 / h^4) dV, k(s) = exp(-1 / (1 - s)).
struct KernelRule {
  double h = 0.0;
  std::vector<Point> nodes;
  std::vector<double> weights;
};

/// Gauss rule with `resolution` nodes per axis (even, >= 4): Gauss-Legendre in (rho / h)^4
/// radially, two-point cells in the two gauge-polar angles.
KernelRule group_kernel_rule(double h, int resolution);

/// u_h(xi) = sum_i w_i u(eta_i o xi), a discretized group convolution.
///
/// Smooth u: jets are the weighted averages of the left-translated jets, so H(u_h) is a
/// positive combination of values of H(u) and H-convexity carries over exactly.
/// Value-only u: jets come from central differences of u_h in the left-invariant frame,
/// with steps h / 4 horizontally and h^2 / 4 vertically.
ScalarField mollify(const ScalarField& u, double h, int kernel_resolution = 8);

/// h_measure of mollify(u, h) along a strictly decreasing h_sequence (size >= 2).
/// value is the last term; error_indicator adds |last - previous| to the last
/// quadrature indicator. Throws std::invalid_argument for a bad sequence or when the
/// kernel support around sampled region boundary points leaves u's domain.
MeasureEstimate h_measure_continuous(const ScalarField& u, const Region& region,
                                     const std::vector<double>& h_sequence,
                                     const QuadratureSpec& spec, int kernel_resolution = 6);

struct WeakConvergenceReport {
  /// \int f d mu(u_k) for each k.
  std::vector<MeasureEstimate> terms;
  MeasureEstimate limit;
  /// |term_k - limit|.
  std::vector<double> gaps;
  bool monotone = false;
  double tolerance = 0.0;
  bool pass = false;
};

/// Compares \int f d mu(u_k) against \int f d mu(u) over the support region. Passes when
/// the gaps decrease monotonically and the last one is below tolerance (plus quadrature
/// indicators).
WeakConvergenceReport weak_convergence_test(const std::vector<ScalarField>& sequence,
                                            const ScalarField& limit, const Density& test,
                                            const Region& support, const QuadratureSpec& spec,
                                            double tolerance);

/// A constant measured by two independent routes.
struct ConstantEstimate {
  /// Gauge-polar tensor quadrature through the field pipeline.
  MeasureEstimate tensor;
  /// Nested adaptive 1D quadrature in cylindrical coordinates (x^2 + y^2 = s^2).
  double cylindrical = 0.0;
  double relative_gap() const noexcept;
};

/// |B_1(0)|.
ConstantEstimate unit_ball_volume(const QuadratureSpec& spec);

/// c1 = 12 \int_{B_1} (d_t rho)^2, the total H-measure of the unit cone rho - 1.
ConstantEstimate cone_constant(const QuadratureSpec& spec);

}  // namespace hma
