#include "hma/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hma/parallel.hpp"

namespace hma {

namespace {

constexpr double kPi = std::numbers::pi;

struct Axis {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Axis composite_axis(double a, double b, int cells, const GaussRule& rule) {
  Axis axis;
  const double h = (b - a) / cells;
  for (int c = 0; c < cells; ++c) {
    const double mid = a + (c + 0.5) * h;
    for (int q = 0; q < rule.size; ++q) {
      axis.nodes.push_back(mid + 0.5 * h * rule.nodes[q]);
      axis.weights.push_back(0.5 * h * rule.weights[q]);
    }
  }
  return axis;
}

/// Sum over an outer index in parallel; each slab is summed in a fixed order.
template <class SlabFn>
double deterministic_sum(std::size_t slabs, SlabFn slab_value) {
  std::vector<double> partial(slabs, 0.0);
  parallel_for(slabs, [&](std::size_t i) { partial[i] = slab_value(i); });
  return pairwise_sum(partial);
}

double integrate_polar(const Density& f, const Point& center, double inner, double outer,
                       int cells, const GaussRule& rule) {
  Axis rho = composite_axis(inner, outer, cells, rule);
  Axis v = composite_axis(-1.0, 1.0, cells, rule);
  Axis theta = composite_axis(0.0, 2.0 * kPi, cells, rule);
  // Angular factors are shared by every radial slab.
  const std::size_t nv = v.nodes.size();
  const std::size_t nt = theta.nodes.size();
  std::vector<double> horiz(nv);
  std::vector<double> vert(nv);
  std::vector<double> wv(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    const double s = v.nodes[j];
    const double psi = 0.25 * kPi * (3.0 * s - s * s * s);
    horiz[j] = std::sqrt(std::max(0.0, std::cos(psi)));
    vert[j] = std::sin(psi);
    wv[j] = v.weights[j] * 0.75 * kPi * (1.0 - s * s);
  }
  std::vector<double> ct(nt);
  std::vector<double> st(nt);
  for (std::size_t k = 0; k < nt; ++k) {
    ct[k] = std::cos(theta.nodes[k]);
    st[k] = std::sin(theta.nodes[k]);
  }
  return deterministic_sum(rho.nodes.size(), [&](std::size_t i) {
    const double r = rho.nodes[i];
    std::vector<double> row(nt);
    std::vector<double> rows(nv);
    for (std::size_t j = 0; j < nv; ++j) {
      for (std::size_t k = 0; k < nt; ++k) {
        const Point q{r * horiz[j] * ct[k], r * horiz[j] * st[k], r * r * vert[j]};
        row[k] = theta.weights[k] * f(compose(center, q));
      }
      rows[j] = wv[j] * pairwise_sum(row);
    }
    return rho.weights[i] * r * r * r * pairwise_sum(rows);
  });
}

double integrate_box(const Density& f, const BoxRegion& b, int cells, const GaussRule& rule) {
  Axis ax = composite_axis(b.lo.x, b.hi.x, cells, rule);
  Axis ay = composite_axis(b.lo.y, b.hi.y, cells, rule);
  Axis at = composite_axis(b.lo.t, b.hi.t, cells, rule);
  return deterministic_sum(ax.nodes.size(), [&](std::size_t i) {
    std::vector<double> row(at.nodes.size());
    std::vector<double> rows(ay.nodes.size());
    for (std::size_t j = 0; j < ay.nodes.size(); ++j) {
      for (std::size_t k = 0; k < at.nodes.size(); ++k) {
        row[k] = at.weights[k] * f(Point{ax.nodes[i], ay.nodes[j], at.nodes[k]});
      }
      rows[j] = ay.weights[j] * pairwise_sum(row);
    }
    return ax.weights[i] * pairwise_sum(rows);
  });
}

double integrate_level(const Density& f, const Region& region, int cells, const GaussRule& rule) {
  const Region::Shape& shape = region.shape();
  if (const auto* b = std::get_if<BallRegion>(&shape)) {
    return integrate_polar(f, b->center, 0.0, b->radius, cells, rule);
  }
  if (const auto* a = std::get_if<AnnulusRegion>(&shape)) {
    return integrate_polar(f, a->center, a->inner, a->outer, cells, rule);
  }
  return integrate_box(f, std::get<BoxRegion>(shape), cells, rule);
}

}  // namespace

GaussRule gauss_legendre(int points) {
  switch (points) {
    case 1:
      return {{0.0}, {2.0}, 1};
    case 2: {
      const double a = 1.0 / std::sqrt(3.0);
      return {{-a, a}, {1.0, 1.0}, 2};
    }
    case 3: {
      const double a = std::sqrt(0.6);
      return {{-a, 0.0, a}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}, 3};
    }
    case 4: {
      const double s = 2.0 / 7.0 * std::sqrt(6.0 / 5.0);
      const double a = std::sqrt(3.0 / 7.0 - s);
      const double b = std::sqrt(3.0 / 7.0 + s);
      const double wa = (18.0 + std::sqrt(30.0)) / 36.0;
      const double wb = (18.0 - std::sqrt(30.0)) / 36.0;
      return {{-b, -a, a, b}, {wb, wa, wa, wb}, 4};
    }
    default:
      throw std::invalid_argument("gauss_legendre: supported orders are 1 to 4");
  }
}

void QuadratureSpec::validate(const Region& region) const {
  if (base_resolution < 8) throw std::invalid_argument("QuadratureSpec: base_resolution < 8");
  if (refinement_levels < 1 || refinement_levels > 6) {
    throw std::invalid_argument("QuadratureSpec: refinement_levels must be in [1, 6]");
  }
  if (points_per_cell < 1 || points_per_cell > 4) {
    throw std::invalid_argument("QuadratureSpec: points_per_cell must be in [1, 4]");
  }
  if (singular_exclusion < 0.0) {
    throw std::invalid_argument("QuadratureSpec: negative singular_exclusion");
  }
  if (singular_exclusion > 0.0) {
    if (!region.is_gauge_region()) {
      throw std::invalid_argument("QuadratureSpec: singular exclusion needs a gauge region");
    }
    const auto* ball = std::get_if<BallRegion>(&region.shape());
    const double limit = ball ? ball->radius : std::get<AnnulusRegion>(region.shape()).outer;
    if (singular_exclusion >= limit) {
      throw std::invalid_argument("QuadratureSpec: exclusion radius exceeds the region");
    }
  }
}

QuadratureSpec QuadratureSpec::from_resolution(int nodes_per_axis, double singular_exclusion) {
  QuadratureSpec spec;
  spec.points_per_cell = 2;
  spec.refinement_levels = 1;
  spec.base_resolution = nodes_per_axis / 4;
  spec.singular_exclusion = singular_exclusion;
  if (spec.base_resolution < 8) {
    throw std::invalid_argument("QuadratureSpec::from_resolution: need at least 32 nodes per axis");
  }
  return spec;
}

MeasureEstimate integrate(const Density& density, const Region& region,
                          const QuadratureSpec& spec) {
  spec.validate(region);
  const Region domain = region.excise(spec.singular_exclusion);
  const GaussRule rule = gauss_legendre(spec.points_per_cell);
  const int fine = spec.finest_cells();
  const double coarse_value = integrate_level(density, domain, fine / 2, rule);
  const double fine_value = integrate_level(density, domain, fine, rule);
  const auto n = static_cast<std::size_t>(fine);
  return {fine_value, std::abs(fine_value - coarse_value), n * n * n};
}

MeasureEstimate integrate_bounding_box(const Density& density, const Region& region,
                                       int resolution) {
  if (resolution < 8 || resolution % 2 != 0) {
    throw std::invalid_argument("integrate_bounding_box: resolution must be even and >= 8");
  }
  // Integrate over the frame translated to the region center; left translation has unit
  // Jacobian. Boxes are already axis aligned.
  Point center = origin;
  double outer = 0.0;
  double inner = -1.0;
  BoxRegion box{};
  if (const auto* b = std::get_if<BallRegion>(&region.shape())) {
    center = b->center;
    outer = b->radius;
  } else if (const auto* a = std::get_if<AnnulusRegion>(&region.shape())) {
    center = a->center;
    outer = a->outer;
    inner = a->inner;
  } else {
    box = std::get<BoxRegion>(region.shape());
  }
  const bool gauge_frame = region.is_gauge_region();
  if (gauge_frame) {
    box = BoxRegion{{-outer, -outer, -outer * outer}, {outer, outer, outer * outer}};
  }
  const auto level = [&](int n) {
    const double hx = (box.hi.x - box.lo.x) / n;
    const double hy = (box.hi.y - box.lo.y) / n;
    const double ht = (box.hi.t - box.lo.t) / n;
    const double cell = hx * hy * ht;
    return deterministic_sum(static_cast<std::size_t>(n), [&](std::size_t i) {
      std::vector<double> row(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
      const double x = box.lo.x + (static_cast<double>(i) + 0.5) * hx;
      for (int j = 0; j < n; ++j) {
        const double y = box.lo.y + (j + 0.5) * hy;
        for (int k = 0; k < n; ++k) {
          const Point q{x, y, box.lo.t + (k + 0.5) * ht};
          double value = 0.0;
          if (gauge_frame) {
            const double rho = gauge(q);
            if (rho < outer && rho > inner) value = density(compose(center, q));
          } else {
            value = density(q);
          }
          row[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(k)] = value;
        }
      }
      return cell * pairwise_sum(row);
    });
  };
  const double fine = level(resolution);
  const double coarse = level(resolution / 2);
  const auto n = static_cast<std::size_t>(resolution);
  return {fine, std::abs(fine - coarse), n * n * n};
}

}  // namespace hma
