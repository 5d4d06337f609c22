#pragma once

/// \file field.hpp
/// Scalar fields on open subsets of H^1 with second-order Euclidean jets.

#include <array>
#include <functional>
#include <memory>
#include <string>

#include "hma/errors.hpp"
#include "hma/group.hpp"
#include "hma/jet.hpp"

namespace hma {

/// A smooth scalar profile h on an interval, evaluated as (h, h', h'').
struct Profile {
  std::string name;
  std::function<std::array<double, 3>(double)> eval;
  /// Where h is twice differentiable; an empty predicate means everywhere.
  std::function<bool(double)> regular;

  bool is_regular(double s) const { return !regular || regular(s); }
};

/// A scalar field u: Omega -> R.
///
/// Smooth fields evaluate to a Jet2 at every point of their declared domain; value-only
/// fields (continuous composites) answer value queries and reject derivative queries.
/// Value queries are not domain-checked: removable singular points such as cone vertices
/// report their limit value. Fields are immutable and cheap to copy.
class ScalarField {
 public:
  using ValueFn = std::function<double(const Point&)>;
  using JetFn = std::function<Jet2(const Point&)>;
  using DomainFn = std::function<bool(const Point&)>;

  static ScalarField smooth(std::string name, ValueFn value, JetFn jet, DomainFn domain = {});
  static ScalarField continuous(std::string name, ValueFn value, DomainFn domain = {});

  /// Jets from second-order central differences of a black-box value function.
  static ScalarField finite_difference(std::string name, ValueFn value, double step,
                                       DomainFn domain = {});

  /// Field from a generic expression f(x, y, t), instantiated with double for values and
  /// with Jet2 for exact jets.
  template <class F>
  static ScalarField expression(std::string name, F f, DomainFn domain = {}) {
    return smooth(
        std::move(name), [f](const Point& p) { return static_cast<double>(f(p.x, p.y, p.t)); },
        [f](const Point& p) {
          const JetPoint v = seed(p);
          return Jet2(f(v.x, v.y, v.t));
        },
        std::move(domain));
  }

  const std::string& name() const noexcept { return impl_->name; }
  bool is_smooth() const noexcept { return static_cast<bool>(impl_->jet); }
  bool in_domain(const Point& p) const { return !impl_->domain || impl_->domain(p); }

  double operator()(const Point& p) const { return impl_->value(p); }

  /// Throws DomainError outside the domain and NotSmoothError for value-only fields.
  Jet2 jet(const Point& p) const;

  ScalarField renamed(std::string name) const;
  /// Same field on the intersection of its domain with `domain`.
  ScalarField restricted(DomainFn domain) const;
  /// xi -> u(eta o xi); preserves H-convexity since X and Y are left invariant.
  ScalarField left_translate(const Point& eta) const;

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(double s, const ScalarField& a);
  friend ScalarField operator+(const ScalarField& a, double c);

 private:
  struct Impl {
    std::string name;
    ValueFn value;
    JetFn jet;
    DomainFn domain;
  };

  explicit ScalarField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

inline ScalarField operator-(const ScalarField& a, double c) { return a + (-c); }

/// h(u) for a smooth profile h; points where h is irregular at u leave the domain.
ScalarField compose(const Profile& h, const ScalarField& u);

/// The coordinate functions and constants as fields.
ScalarField coordinate_x();
ScalarField coordinate_y();
ScalarField coordinate_t();
ScalarField constant_field(double c);

}  // namespace hma
