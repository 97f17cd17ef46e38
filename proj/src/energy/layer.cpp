#include <algorithm>
#include <cmath>

#include "wwdtn/energy.hpp"
#include "wwdtn/error.hpp"
#include "wwdtn/symmetry.hpp"

namespace wwdtn {

LayerResult compute_layer(const FractionalParams& params, const SlabGrid& grid, double tol, int band) {
  require(grid.n() == 1, "layers are computed on 1D grids");
  require(band >= 1, "the pinned band needs at least one cell");
  const GridPtr g = grid.with_lateral(Lateral::reflecting);
  const auto pinned = lateral_band(*g, band);

  TraceField start(g);
  for (int i = 0; i < g->nx(); ++i) {
    const double x = g->coord(i);
    start[i] = pinned[i] ? (x < 0 ? -1.0 : 1.0) : std::tanh(x);
  }
  MinimizeOptions opt;
  opt.tol = tol;
  opt.odd_symmetry = true;
  const auto pot = Potential::double_well();
  auto res = minimize_energy(start, pinned, pot, params, opt);

  LayerResult out{res.trace, res.state, res.iterations, 0.0, 0.0, band};
  const std::size_t n = out.trace.size();
  for (std::size_t i = 0; i < n; ++i) out.odd_defect = std::max(out.odd_defect, std::abs(out.trace[i] + out.trace[n - 1 - i]));
  const auto el = euler_lagrange_residual(out.trace, pot, params);
  for (std::size_t i = 0; i < n; ++i)
    if (!pinned[i]) out.el_residual = std::max(out.el_residual, std::abs(el[i]));

  if (monotonicity_check(out.trace.values()) != Monotonicity::increasing)
    fail(ErrorKind::not_monotone, "layer profile is not increasing; refine the grid or enlarge the box");
  return out;
}

TraceField tilted_profile(const TraceField& profile, const GridPtr& grid, std::array<double, 2> omega) {
  require(profile.grid().n() == 1, "profile must live on a 1D grid");
  require(grid->n() == 2, "target grid must be 2D");
  const double norm = std::hypot(omega[0], omega[1]);
  require(std::abs(norm - 1.0) < 1e-12, "direction must be a unit vector");
  const SlabGrid& pg = profile.grid();
  const double h = pg.spacing();
  const int np = pg.nx();
  TraceField out(grid);
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto x = grid->position(f);
    const double t = omega[0] * x[0] + omega[1] * x[1];
    const double pos = (t - pg.coord(0)) / h;
    if (pos <= 0.0) {
      out[f] = profile[0];
    } else if (pos >= np - 1) {
      out[f] = profile[np - 1];
    } else {
      const int k = static_cast<int>(pos);
      const double w = pos - k;
      out[f] = (1 - w) * profile[k] + w * profile[k + 1];
    }
  }
  return out;
}

}  // namespace wwdtn
