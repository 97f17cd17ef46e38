#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wwdtn/field.hpp"
#include "wwdtn/params.hpp"
#include "wwdtn/potential.hpp"

namespace wwdtn {

struct EnergyBreakdown {
  double radius = 0.0;
  double dirichlet = 0.0;             // (1/2) int_{C_R} y^a |grad v|^2
  double horizontal_dirichlet = 0.0;  // (1/2) int_{C_R} y^a |grad_x v|^2, part of dirichlet
  double potential = 0.0;             // int_{B_R} F(v(., 0))
  double total = 0.0;
};

/// Fraction of each horizontal cell inside the ball B_R (exact in 1D,
/// subsampled on a 16 x 16 lattice per cell in 2D).
std::vector<double> ball_weights(const SlabGrid& grid, double radius);

/// Localized energy on the cylinder B_R x (0, 1). Vertical differences use
/// the harmonic half-node weights, horizontal derivatives are spectral.
EnergyBreakdown energy_localized(const SlabField& v, double radius, const Potential& pot, const FractionalParams& params);

/// Same quadrature over the whole box.
EnergyBreakdown energy_box(const SlabField& v, const Potential& pot, const FractionalParams& params);

/// First variation of energy_localized: dE[w] = sum_k gradient[k] * w[k]
/// over all slab nodes.
SlabField energy_localized_gradient(const SlabField& v, double radius, const Potential& pot, const FractionalParams& params);

/// Nodes within `width` cells of the lateral boundary of the box.
std::vector<std::uint8_t> lateral_band(const SlabGrid& grid, int width);

struct MinimizeOptions {
  double tol = 1e-8;
  int max_iter = 200000;
  double lo = -1.0;
  double hi = 1.0;
  /// Impose u(-x) = -u(x) on a 1D grid after every step.
  bool odd_symmetry = false;
  /// Preconditioner shift; <= 0 selects the largest concavity of the potential on [lo, hi].
  double shift = 0.0;
};

struct MinimizeResult {
  TraceField trace;
  SlabField state;
  std::vector<double> energy_history;
  int iterations = 0;
  /// Sup-norm of the projected Euler-Lagrange residual at free nodes.
  double residual = 0.0;
};

/// Minimizes the box energy (1/2)<L_a u, u> + int F(u) over traces that agree
/// with `boundary` on the pinned nodes and take values in [lo, hi]. Free
/// nodes start from `boundary` as well. The slab state is the extension of the
/// minimizing trace.
MinimizeResult minimize_energy(const TraceField& boundary, std::span<const std::uint8_t> pinned, const Potential& pot,
                               const FractionalParams& params, const MinimizeOptions& options = {});

/// Reduced energy of a trace: (1/2)<S u, u> with the closed-form symbol plus the potential.
double trace_energy(const TraceField& u, const Potential& pot, const FractionalParams& params);

/// L_a u - f(u) with the closed-form symbol.
TraceField euler_lagrange_residual(const TraceField& u, const Potential& pot, const FractionalParams& params);

struct LayerResult {
  TraceField trace;
  SlabField state;
  int iterations = 0;
  double el_residual = 0.0;   // sup over nodes outside the pinned band
  double odd_defect = 0.0;    // sup |u(x) + u(-x)|
  int band = 0;
};

/// Heteroclinic layer of the double well on a 1D grid, computed on the
/// reflecting copy of `grid` with `band` cells pinned to -1 and +1 at the two
/// ends. Throws ErrorKind::not_monotone if the profile is not increasing.
LayerResult compute_layer(const FractionalParams& params, const SlabGrid& grid, double tol = 1e-8, int band = 2);

struct EigenOptions {
  double tol = 1e-8;
  int max_iter = 10000;
  std::uint64_t seed = 1;
};

/// Smallest eigenvalue of the second variation <L_a xi, xi> - int f'(u) xi^2
/// against the trace mass, over test functions vanishing on the pinned nodes
/// (empty mask: none pinned).
double second_variation_min_eig(const SlabField& v, std::span<const std::uint8_t> pinned, const Potential& pot,
                                const FractionalParams& params, const EigenOptions& options = {});

struct SweepResult {
  std::vector<EnergyBreakdown> rows;
  double slope = 0.0;             // fitted exponent of the total energy
  double horizontal_slope = 0.0;  // same for the horizontal Dirichlet part
};

/// Energies on increasing radii and the least-squares slope of log E against
/// log R, fitted over the upper half of the radii or over R >= fit_min_radius.
SweepResult energy_scaling_sweep(const SlabField& v, std::span<const double> radii, const Potential& pot,
                                 const FractionalParams& params, std::optional<double> fit_min_radius = std::nullopt);

/// 2D trace u(x) = u0(omega . x) sampled by linear interpolation from a 1D
/// profile (clamped to its end values outside its box).
TraceField tilted_profile(const TraceField& profile, const GridPtr& grid, std::array<double, 2> omega);

}  // namespace wwdtn
