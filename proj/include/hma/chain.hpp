#pragma once

/// \file chain.hpp
/// The chain of horizontal moves carrying a value bound from a point of B_R(0) to the
/// center. Each step goes from a point to another point of its horizontal plane, and
/// convexity along the extended segment (which meets the sphere at parameter lambda)
/// gives u(next) <= factor * u(prev) for H-convex u vanishing on the sphere.

#include <optional>
#include <string>
#include <vector>

#include "hma/group.hpp"

namespace hma {

enum class ChainCase { near, far };

const char* to_string(ChainCase c) noexcept;

struct ChainStep {
  std::string label;
  Point from;
  Point to;
  /// Where the extended segment from `from` through `to` meets the sphere.
  double lambda = 0.0;
  /// The guaranteed lower bound on lambda (2, or (1 - alpha) / beta).
  double lambda_bound = 0.0;
  /// Relative radius and step length bounds; absent for the projection steps.
  std::optional<double> alpha;
  std::optional<double> beta;
  /// u(to) <= factor * u(from).
  double factor = 1.0;
};

struct ChainReport {
  Point start;
  double R = 1.0;
  ChainCase chain_case = ChainCase::near;
  std::vector<ChainStep> steps;
  double total_factor = 1.0;
  /// Far case: number of loop iterations N and the t values t_0 .. t_N.
  int iterations = 0;
  std::vector<double> t_levels;
  /// Far case: C1^2 [4 (R^2 - |t0|) / (3 R^2)]^{gamma / ln(5/3)}, gamma = -ln C1, in closed
  /// form and rebuilt from the executed recursion.
  std::optional<double> exponent_form_factor;
  std::optional<double> exponent_form_recursion;
  /// Far case: the real number L with N - 1 < L <= N that fixes the iteration count.
  std::optional<double> iteration_log;

  /// Points visited, start first.
  std::vector<Point> points() const;
};

/// Product of the four near-case factors:
/// 1/2 * (3 - 17^{1/4}) / (4 - 17^{1/4}) * (3 - 8^{1/4}) / (4 - 8^{1/4}) * 2/3.
double near_case_constant() noexcept;

/// Product of the four far-loop factors: (1/2) * q * (1 - 1/sqrt 2) * q with
/// q = (sqrt 8 - 5^{1/4} - 1) / (sqrt 8 - 5^{1/4}).
double far_loop_constant() noexcept;

/// C1^2 [4 (R^2 - |t0|) / (3 R^2)]^{gamma / ln(5/3)} with C1 = near_case_constant().
double chain_exponent_form(double t0, double R);

/// Builds the chain from xi0 to the origin. Throws std::invalid_argument unless
/// rho(xi0) < R.
ChainReport build_chain(const Point& xi0, double R);

}  // namespace hma
