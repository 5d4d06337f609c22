#include "hma/catalog.hpp"

#include <stdexcept>

#include "hma/barriers.hpp"
#include "hma/convexity.hpp"
#include "hma/horizontal.hpp"
#include "hma/mollified_max.hpp"

namespace hma {

namespace {

ScalarField bowl() {
  return ScalarField::expression("bowl", [](auto x, auto y, auto) { return x * x + y * y; });
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  const auto add = [&](ScalarField f, bool convex, bool singular = false) {
    out.push_back({f.name(), f, convex, singular});
  };

  add(bowl(), true);
  add(quartic_norm(), true);
  add(ScalarField::expression("shifted_bowl",
                              [](auto x, auto y, auto t) {
                                return (x - 0.3) * (x - 0.3) + (y + 0.2) * (y + 0.2) + 0.5 * t;
                              }),
      true);
  add(ScalarField::expression("exp_sum",
                              [](auto x, auto y, auto) { return exp(0.7 * x) + exp(-0.5 * y); }),
      true);
  add(ScalarField::expression("r_squared",
                              [](auto x, auto y, auto t) {
                                const auto q = x * x + y * y;
                                const auto r = q * q + t * t;
                                return r * r;
                              }),
      true);
  add(quartic_norm().left_translate(Point{0.2, -0.1, 0.05}).renamed("translated_r"), true);
  add(ScalarField::expression("bowl_r_t",
                              [](auto x, auto y, auto t) {
                                const auto q = x * x + y * y;
                                return q + 0.3 * (q * q + t * t) + 0.2 * t;
                              }),
      true);
  add(ScalarField::expression("quartic_xy",
                              [](auto x, auto y, auto) { return x * x * x * x + y * y * y * y; }),
      true);
  add(ScalarField::expression("logsumexp",
                              [](auto x, auto y, auto t) {
                                const auto q = x * x + y * y;
                                return log(exp(q) + exp(q * q + t * t));
                              }),
      true);
  add(ScalarField::expression("exp_r",
                              [](auto x, auto y, auto t) {
                                const auto q = x * x + y * y;
                                return exp(q * q + t * t);
                              }),
      true);
  add(quartic_barrier(1.0, 0.5, -1.0).renamed("quartic_barrier"), true);
  add(ScalarField::expression("softplus",
                              [](auto x, auto y, auto) { return log(1.0 + exp(x + y)); }),
      true);
  add(convex_compose(mollified_max_profile(0.3), bowl(), quartic_norm() + 0.1)
          .renamed("fh_bowl_r"),
      true);
  add(ScalarField::expression("bowl_t2",
                              [](auto x, auto y, auto t) { return x * x + y * y + t * t; }),
      true);
  add(gauge_field(), true, true);

  add(ScalarField::expression("neg_t2", [](auto, auto, auto t) { return -(t * t); }), false);
  add(ScalarField::expression("wave",
                              [](auto x, auto y, auto t) { return sin(x) * cos(y) + t; }),
      false);
  add(ScalarField::expression("neg_bowl", [](auto x, auto y, auto) { return -(x * x + y * y); }),
      false);
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::vector<CatalogEntry> h_convex_catalog() {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : catalog()) {
    if (e.h_convex && !e.singular) out.push_back(e);
  }
  return out;
}

std::vector<CatalogEntry> extended_h_convex_catalog() {
  std::vector<CatalogEntry> out = h_convex_catalog();
  const std::size_t base = out.size();
  const Point shift{-0.15, 0.1, 0.04};
  for (std::size_t i = 0; i < base; ++i) {
    // Left translates and positive multiples keep H-convexity.
    const ScalarField f = (1.7 * out[i].field.left_translate(shift)) + 0.25;
    out.push_back({out[i].name + "_moved", f.renamed(out[i].name + "_moved"), true, false});
  }
  return out;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("unknown catalog field '" + name + "'");
}

}  // namespace hma
