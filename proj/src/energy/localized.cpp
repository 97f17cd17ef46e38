#include <algorithm>
#include <cmath>

#include "wwdtn/energy.hpp"
#include "wwdtn/error.hpp"
#include "wwdtn/fourier.hpp"
#include "wwdtn/vertical.hpp"

namespace wwdtn {

namespace {

// Per-node energy densities (already multiplied by the cell measure), so that
// any radius is a weighted sum.
struct Densities {
  std::vector<double> vertical;
  std::vector<double> horizontal;
  std::vector<double> potential;
};

Densities densities(const SlabField& v, const Potential& pot, const FractionalParams& params) {
  const SlabGrid& grid = v.grid();
  const std::size_t m = grid.trace_size();
  const double cell = grid.cell_measure();
  VerticalStencil st(grid.y_nodes(), params);
  HorizontalTransform tr(grid);
  Densities d{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0), std::vector<double>(m)};
  std::vector<double> grad(m);
  for (int j = 0; j < grid.my(); ++j) {
    if (j + 1 < grid.my()) {
      const double k = st.kappa()[j];
      for (std::size_t i = 0; i < m; ++i) {
        const double dv = v.at(j + 1, i) - v.at(j, i);
        d.vertical[i] += k * dv * dv;
      }
    }
    for (int axis = 0; axis < grid.n(); ++axis) {
      tr.derivative(v.level(j), axis, grad);
      const double mj = st.mass()[j];
      for (std::size_t i = 0; i < m; ++i) d.horizontal[i] += mj * grad[i] * grad[i];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    d.vertical[i] *= 0.5 * cell;
    d.horizontal[i] *= 0.5 * cell;
    d.potential[i] = cell * pot.F(v.at(0, i));
  }
  return d;
}

EnergyBreakdown integrate(const Densities& d, std::span<const double> w, double radius) {
  EnergyBreakdown e;
  e.radius = radius;
  double vert = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    vert += w[i] * d.vertical[i];
    e.horizontal_dirichlet += w[i] * d.horizontal[i];
    e.potential += w[i] * d.potential[i];
  }
  e.dirichlet = vert + e.horizontal_dirichlet;
  e.total = e.dirichlet + e.potential;
  return e;
}

void check_radius(const SlabGrid& grid, double radius) {
  require(std::isfinite(radius) && radius > 0.0, "radius must be positive");
  if (radius > 0.5 * grid.box() * (1 + 1e-12))
    fail(ErrorKind::invalid_argument, "radius exceeds the half box");
}

}  // namespace

std::vector<double> ball_weights(const SlabGrid& grid, double radius) {
  const double h = grid.spacing();
  std::vector<double> w(grid.trace_size(), 0.0);
  if (grid.n() == 1) {
    for (int i = 0; i < grid.nx(); ++i) {
      const double x = grid.coord(i);
      const double lo = std::max(x - 0.5 * h, -radius), hi = std::min(x + 0.5 * h, radius);
      w[i] = std::max(0.0, hi - lo) / h;
    }
    return w;
  }
  constexpr int sub = 16;
  const double r2 = radius * radius;
  const double reach = radius + h;
  for (int i1 = 0; i1 < grid.nx(); ++i1) {
    const double x1 = grid.coord(i1);
    if (std::abs(x1) > reach) continue;
    for (int i2 = 0; i2 < grid.nx(); ++i2) {
      const double x2 = grid.coord(i2);
      if (std::abs(x2) > reach) continue;
      const double far = std::hypot(std::abs(x1) + 0.5 * h, std::abs(x2) + 0.5 * h);
      const double near = std::hypot(std::max(std::abs(x1) - 0.5 * h, 0.0), std::max(std::abs(x2) - 0.5 * h, 0.0));
      double frac;
      if (far <= radius) {
        frac = 1.0;
      } else if (near >= radius) {
        frac = 0.0;
      } else {
        int inside = 0;
        for (int a = 0; a < sub; ++a)
          for (int b = 0; b < sub; ++b) {
            const double p1 = x1 + ((a + 0.5) / sub - 0.5) * h, p2 = x2 + ((b + 0.5) / sub - 0.5) * h;
            if (p1 * p1 + p2 * p2 <= r2) ++inside;
          }
        frac = static_cast<double>(inside) / (sub * sub);
      }
      w[static_cast<std::size_t>(i1) * grid.nx() + i2] = frac;
    }
  }
  return w;
}

EnergyBreakdown energy_localized(const SlabField& v, double radius, const Potential& pot, const FractionalParams& params) {
  check_radius(v.grid(), radius);
  const auto w = ball_weights(v.grid(), radius);
  return integrate(densities(v, pot, params), w, radius);
}

EnergyBreakdown energy_box(const SlabField& v, const Potential& pot, const FractionalParams& params) {
  const std::vector<double> w(v.grid().trace_size(), 1.0);
  return integrate(densities(v, pot, params), w, 0.5 * v.grid().box());
}

SlabField energy_localized_gradient(const SlabField& v, double radius, const Potential& pot, const FractionalParams& params) {
  const SlabGrid& grid = v.grid();
  check_radius(grid, radius);
  const auto w = ball_weights(grid, radius);
  const std::size_t m = grid.trace_size();
  const double cell = grid.cell_measure();
  VerticalStencil st(grid.y_nodes(), params);
  HorizontalTransform tr(grid);
  std::vector<double> g(grid.slab_size(), 0.0), d(m), back(m);
  for (int j = 0; j < grid.my(); ++j) {
    double* gj = g.data() + static_cast<std::size_t>(j) * m;
    if (j > 0) {
      const double k = st.kappa()[j - 1];
      for (std::size_t i = 0; i < m; ++i) gj[i] += cell * w[i] * k * (v.at(j, i) - v.at(j - 1, i));
    }
    if (j + 1 < grid.my()) {
      const double k = st.kappa()[j];
      for (std::size_t i = 0; i < m; ++i) gj[i] -= cell * w[i] * k * (v.at(j + 1, i) - v.at(j, i));
    }
    const double mj = st.mass()[j];
    for (int axis = 0; axis < grid.n(); ++axis) {
      tr.derivative(v.level(j), axis, d);
      for (std::size_t i = 0; i < m; ++i) d[i] *= w[i];
      tr.derivative_adjoint(d, axis, back);
      for (std::size_t i = 0; i < m; ++i) gj[i] += cell * mj * back[i];
    }
  }
  for (std::size_t i = 0; i < m; ++i) g[i] -= cell * w[i] * pot.f(v.at(0, i));
  return SlabField(v.grid_ptr(), std::move(g));
}

std::vector<std::uint8_t> lateral_band(const SlabGrid& grid, int width) {
  require(width >= 0 && 2 * width < grid.nx(), "band width must leave free nodes");
  const int nx = grid.nx();
  auto edge = [&](int i) { return i < width || i >= nx - width; };
  std::vector<std::uint8_t> mask(grid.trace_size(), 0);
  for (std::size_t f = 0; f < mask.size(); ++f) {
    if (grid.n() == 1) {
      mask[f] = edge(static_cast<int>(f));
    } else {
      mask[f] = edge(static_cast<int>(f / nx)) || edge(static_cast<int>(f % nx));
    }
  }
  return mask;
}

// Kept here so the sweep shares the density pass across radii.
SweepResult energy_scaling_sweep(const SlabField& v, std::span<const double> radii, const Potential& pot,
                                 const FractionalParams& params, std::optional<double> fit_min_radius) {
  require(radii.size() >= 2, "sweep needs at least two radii");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    check_radius(v.grid(), radii[k]);
    if (k > 0) require(radii[k] > radii[k - 1], "radii must be increasing");
  }
  const auto d = densities(v, pot, params);
  SweepResult out;
  for (double r : radii) out.rows.push_back(integrate(d, ball_weights(v.grid(), r), r));

  std::size_t first = radii.size() / 2;
  if (fit_min_radius) {
    first = static_cast<std::size_t>(std::lower_bound(radii.begin(), radii.end(), *fit_min_radius) - radii.begin());
    require(radii.size() - first >= 2, "fewer than two radii above the fit threshold");
  } else if (radii.size() - first < 2) {
    first = radii.size() - 2;
  }
  auto slope = [&](auto pick) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double cnt = static_cast<double>(radii.size() - first);
    for (std::size_t k = first; k < radii.size(); ++k) {
      const double val = pick(out.rows[k]);
      if (!(val > 0.0)) return std::nan("");
      const double x = std::log(radii[k]), y = std::log(val);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  };
  out.slope = slope([](const EnergyBreakdown& e) { return e.total; });
  out.horizontal_slope = slope([](const EnergyBreakdown& e) { return e.horizontal_dirichlet; });
  return out;
}

}  // namespace wwdtn
