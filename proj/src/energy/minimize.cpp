#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <string>

#include "wwdtn/energy.hpp"
#include "wwdtn/error.hpp"
#include "wwdtn/extension.hpp"

namespace wwdtn {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void odd_project(std::span<double> u) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double a = 0.5 * (u[i] - u[n - 1 - i]);
    u[i] = a;
    u[n - 1 - i] = -a;
  }
}

double potential_sum(std::span<const double> u, const Potential& pot) {
  double acc = 0.0;
  for (double x : u) acc += pot.F(x);
  return acc;
}

}  // namespace

double trace_energy(const TraceField& u, const Potential& pot, const FractionalParams& params) {
  TraceMultiplier op(u.grid(), params);
  return op.half_quadratic_form(u.values()) + u.grid().cell_measure() * potential_sum(u.values(), pot);
}

TraceField euler_lagrange_residual(const TraceField& u, const Potential& pot, const FractionalParams& params) {
  TraceField r = apply_La_spectral(u, params);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= pot.f(u[i]);
  return r;
}

MinimizeResult minimize_energy(const TraceField& boundary, std::span<const std::uint8_t> pinned, const Potential& pot,
                               const FractionalParams& params, const MinimizeOptions& opt) {
  const SlabGrid& grid = boundary.grid();
  const std::size_t m = grid.trace_size();
  require(pinned.size() == m, "pinned mask does not match the grid");
  require(std::isfinite(opt.tol) && opt.tol > 0.0, "tolerance must be positive");
  require(opt.max_iter > 0, "iteration cap must be positive");
  require(opt.lo <= opt.hi, "constraint interval is empty");
  require(!opt.odd_symmetry || grid.n() == 1, "odd symmetry needs a 1D grid");
  for (double x : boundary.values())
    if (x < opt.lo || x > opt.hi) fail(ErrorKind::infeasible, "boundary data leaves the constraint interval");

  TraceMultiplier op(grid, params);
  double shift = opt.shift > 0.0 ? opt.shift : pot.max_curvature(opt.lo, opt.hi);
  if (!(shift > 0.0)) shift = 1.0;
  const double cell = grid.cell_measure();
  // Diagonal of S + shift: the mean of the multiplier over the periodic spectrum.
  double diag = 0.0;
  {
    auto& tr = op.transform();
    const auto& mult = op.multiplier();
    double count = 0.0;
    for (std::size_t h = 0; h < mult.size(); ++h) {
      diag += tr.multiplicity(h) * mult[h];
      count += tr.multiplicity(h);
    }
    diag = diag / count + shift;
  }

  std::vector<double> u(boundary.values().begin(), boundary.values().end());
  if (opt.odd_symmetry) odd_project(u);
  std::vector<double> lu(m), g(m), z(m), z_prev(m), p(m), hp(m), trial(m);
  std::vector<std::uint8_t> active(m, 0);
  auto energy = [&](std::span<const double> w) { return op.half_quadratic_form(w) + cell * potential_sum(w, pot); };
  auto dot = [](std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  };

  MinimizeResult out{boundary, SlabField(boundary.grid_ptr(), std::vector<double>(grid.slab_size())), {}, 0, 0.0};
  double e = energy(u);
  out.energy_history.push_back(e);
  const double slack = 64 * std::numeric_limits<double>::epsilon();
  double gz_prev = 0.0;
  bool restart = true;

  // Preconditioned nonlinear conjugate gradients (Polak-Ribiere+) with
  // projection onto [lo, hi]. Nodes on a bound whose gradient pushes outward
  // are frozen; other bound nodes take a diagonally scaled step so their
  // direction has the sign of the gradient (two-metric projection).
  for (int it = 0;; ++it) {
    op.apply(u, lu);
    double res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = lu[i] - pot.f(u[i]);
      const bool blocked = (u[i] <= opt.lo && r > 0.0) || (u[i] >= opt.hi && r < 0.0);
      g[i] = (pinned[i] || blocked) ? 0.0 : r;
      active[i] = blocked ? 2 : (u[i] <= opt.lo || u[i] >= opt.hi) ? 1 : 0;
      res = std::max(res, std::abs(g[i]));
    }
    out.residual = res;
    out.iterations = it;
    if (res <= opt.tol) break;
    if (it == opt.max_iter)
      fail(ErrorKind::not_converged, "minimization hit the iteration cap with residual " + sci(res));

    op.apply_inverse_shifted(g, shift, z);
    for (std::size_t i = 0; i < m; ++i) {
      if (pinned[i] || active[i] == 2) {
        z[i] = 0.0;
      } else if (active[i] == 1) {
        z[i] = g[i] / diag;
      }
    }
    if (opt.odd_symmetry) odd_project(z);

    const double gz = dot(g, z);
    const double beta = restart ? 0.0 : std::max(0.0, (gz - dot(g, z_prev)) / gz_prev);
    for (std::size_t i = 0; i < m; ++i) p[i] = z[i] + beta * p[i];
    double slope = dot(g, p);
    if (!(slope > 0.0)) {
      p = z;
      slope = gz;
    }

    // Step from the exact curvature of the energy along p.
    op.apply(p, hp);
    double curv = 0.0;
    for (std::size_t i = 0; i < m; ++i) curv += p[i] * (hp[i] - pot.df(u[i]) * p[i]);
    double tau = curv > 0.0 ? slope / curv : 1.0;

    double e_new = e;
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) trial[i] = pinned[i] ? u[i] : std::clamp(u[i] - tau * p[i], opt.lo, opt.hi);
      e_new = energy(trial);
      if (e_new <= e + slack * (std::abs(e) + 1.0)) break;
      tau *= 0.5;
      if (tau < 1e-14) fail(ErrorKind::not_converged, "line search stalled with residual " + sci(res));
    }
    u.swap(trial);
    e = e_new;
    out.energy_history.push_back(e);
    z_prev.swap(z);
    gz_prev = gz;
    restart = false;
  }

  out.trace = TraceField(boundary.grid_ptr(), u);
  out.state = solve_extension(out.trace, params);
  return out;
}

}  // namespace wwdtn
