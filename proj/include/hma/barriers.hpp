#pragma once

/// \file barriers.hpp
/// Special fields used as comparison functions: gauge cones, quartic barriers,
/// exponential barriers and the epsilon perturbation u + eps (x^2 + y^2).

#include "hma/field.hpp"

namespace hma {

/// rho as a field; the origin is outside its domain.
ScalarField gauge_field();

/// m (d(xi, center) / R - 1). H-convex with det H = 0 off the center, which is excluded
/// from the domain; the value there is the limit -m. Throws for m < 0 or R <= 0.
ScalarField gauge_cone(const Point& center, double R, double m);

/// m0 / ((1 - sigma^4) R^4) (R^4 - d(xi, center)^4): zero on the sphere of radius R and
/// m0 on the sphere of radius sigma R. Throws unless 0 < sigma < 1, R > 0 and m0 < 0.
ScalarField quartic_barrier(double R, double sigma, double m0, const Point& center = origin);

/// M - e^{lambda x} - e^{lambda y}, so that X^2 w = -lambda^2 e^{lambda x},
/// Y^2 w = -lambda^2 e^{lambda y} and the mixed derivatives vanish. Throws for lambda <= 0.
ScalarField exp_barrier(double lambda, double M);

/// u + eps (x^2 + y^2). Throws for eps <= 0.
ScalarField epsilon_perturb(const ScalarField& u, double eps);

}  // namespace hma
