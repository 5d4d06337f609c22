#include "hma/field.hpp"

#include <utility>

namespace hma {

ScalarField ScalarField::smooth(std::string name, ValueFn value, JetFn jet, DomainFn domain) {
  return ScalarField(std::make_shared<const Impl>(
      Impl{std::move(name), std::move(value), std::move(jet), std::move(domain)}));
}

ScalarField ScalarField::continuous(std::string name, ValueFn value, DomainFn domain) {
  return ScalarField(
      std::make_shared<const Impl>(Impl{std::move(name), std::move(value), {}, std::move(domain)}));
}

ScalarField ScalarField::finite_difference(std::string name, ValueFn value, double step,
                                           DomainFn domain) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("finite_difference: step must be positive");
  }
  auto jet = [value, step](const Point& p) {
    const auto shifted = [&](int i, double di, int j, double dj) {
      std::array<double, 3> c{p.x, p.y, p.t};
      c[static_cast<std::size_t>(i)] += di;
      if (j >= 0) c[static_cast<std::size_t>(j)] += dj;
      return value(Point{c[0], c[1], c[2]});
    };
    Jet2 r;
    r.value = value(p);
    for (int i = 0; i < 3; ++i) {
      const double fp = shifted(i, step, -1, 0.0);
      const double fm = shifted(i, -step, -1, 0.0);
      r.grad[static_cast<std::size_t>(i)] = (fp - fm) / (2.0 * step);
      r.hess[hess_index(static_cast<std::size_t>(i), static_cast<std::size_t>(i))] =
          (fp - 2.0 * r.value + fm) / (step * step);
      for (int j = i + 1; j < 3; ++j) {
        const double fpp = shifted(i, step, j, step);
        const double fpm = shifted(i, step, j, -step);
        const double fmp = shifted(i, -step, j, step);
        const double fmm = shifted(i, -step, j, -step);
        r.hess[hess_index(static_cast<std::size_t>(i), static_cast<std::size_t>(j))] =
            (fpp - fpm - fmp + fmm) / (4.0 * step * step);
      }
    }
    return r;
  };
  auto v = value;
  return smooth(std::move(name), std::move(v), std::move(jet), std::move(domain));
}

Jet2 ScalarField::jet(const Point& p) const {
  if (!impl_->jet) {
    throw NotSmoothError("field '" + impl_->name + "' defines values only");
  }
  if (!in_domain(p)) {
    throw DomainError("field '" + impl_->name + "' evaluated outside its domain");
  }
  return impl_->jet(p);
}

ScalarField ScalarField::renamed(std::string name) const {
  Impl copy = *impl_;
  copy.name = std::move(name);
  return ScalarField(std::make_shared<const Impl>(std::move(copy)));
}

namespace {

ScalarField::DomainFn both(ScalarField::DomainFn a, ScalarField::DomainFn b) {
  if (!a) return b;
  if (!b) return a;
  return [a = std::move(a), b = std::move(b)](const Point& p) { return a(p) && b(p); };
}

}  // namespace

ScalarField ScalarField::restricted(DomainFn domain) const {
  Impl copy = *impl_;
  copy.domain = both(copy.domain, std::move(domain));
  return ScalarField(std::make_shared<const Impl>(std::move(copy)));
}

ScalarField ScalarField::left_translate(const Point& eta) const {
  auto self = impl_;
  ValueFn value = [self, eta](const Point& p) { return self->value(compose(eta, p)); };
  DomainFn domain;
  if (self->domain) {
    domain = [self, eta](const Point& p) { return self->domain(compose(eta, p)); };
  }
  const std::string name = self->name + "@translated";
  if (!self->jet) {
    return continuous(name, std::move(value), std::move(domain));
  }
  JetFn jet = [self, eta](const Point& p) {
    return pullback_left_translation(self->jet(compose(eta, p)), eta);
  };
  return smooth(name, std::move(value), std::move(jet), std::move(domain));
}

namespace {

template <class ValueOp, class JetOp>
ScalarField combine(const ScalarField& a, const ScalarField& b, const std::string& name,
                    ValueOp value_op, JetOp jet_op) {
  ScalarField::ValueFn value = [a, b, value_op](const Point& p) { return value_op(a(p), b(p)); };
  ScalarField::DomainFn domain;
  domain = [a, b](const Point& p) { return a.in_domain(p) && b.in_domain(p); };
  if (!a.is_smooth() || !b.is_smooth()) {
    return ScalarField::continuous(name, std::move(value), std::move(domain));
  }
  ScalarField::JetFn jet = [a, b, jet_op](const Point& p) { return jet_op(a.jet(p), b.jet(p)); };
  return ScalarField::smooth(name, std::move(value), std::move(jet), std::move(domain));
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return combine(
      a, b, "(" + a.name() + " + " + b.name() + ")", [](double u, double v) { return u + v; },
      [](const Jet2& u, const Jet2& v) { return u + v; });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return combine(
      a, b, "(" + a.name() + " - " + b.name() + ")", [](double u, double v) { return u - v; },
      [](const Jet2& u, const Jet2& v) { return u - v; });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return combine(
      a, b, "(" + a.name() + " * " + b.name() + ")", [](double u, double v) { return u * v; },
      [](const Jet2& u, const Jet2& v) { return u * v; });
}

ScalarField operator*(double s, const ScalarField& a) {
  return combine(
      a, a, std::to_string(s) + "*" + a.name(), [s](double u, double) { return s * u; },
      [s](const Jet2& u, const Jet2&) { return s * u; });
}

ScalarField operator+(const ScalarField& a, double c) {
  return combine(
      a, a, "(" + a.name() + " + " + std::to_string(c) + ")",
      [c](double u, double) { return u + c; }, [c](const Jet2& u, const Jet2&) { return u + c; });
}

ScalarField compose(const Profile& h, const ScalarField& u) {
  ScalarField::ValueFn value = [h, u](const Point& p) { return h.eval(u(p))[0]; };
  ScalarField::DomainFn domain = [h, u](const Point& p) {
    return u.in_domain(p) && h.is_regular(u(p));
  };
  const std::string name = h.name + "(" + u.name() + ")";
  if (!u.is_smooth()) {
    return ScalarField::continuous(name, std::move(value), std::move(domain));
  }
  ScalarField::JetFn jet = [h, u](const Point& p) {
    const Jet2 inner = u.jet(p);
    const auto d = h.eval(inner.value);
    return chain(inner, d[0], d[1], d[2]);
  };
  return ScalarField::smooth(name, std::move(value), std::move(jet), std::move(domain));
}

ScalarField coordinate_x() {
  return ScalarField::expression("x", [](auto x, auto, auto) { return x; });
}

ScalarField coordinate_y() {
  return ScalarField::expression("y", [](auto, auto y, auto) { return y; });
}

ScalarField coordinate_t() {
  return ScalarField::expression("t", [](auto, auto, auto t) { return t; });
}

ScalarField constant_field(double c) {
  return ScalarField::smooth(
      std::to_string(c), [c](const Point&) { return c; },
      [c](const Point&) { return Jet2::constant(c); });
}

}  // namespace hma
