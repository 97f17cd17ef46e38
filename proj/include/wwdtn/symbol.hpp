#pragma once

#include "wwdtn/params.hpp"

namespace wwdtn {

struct SymbolEval {
  double xi;
  double s;
  double value;
};

/// Beyond this frequency the symbol is evaluated by its pure power law.
inline constexpr double kSymbolPowerLawCutoff = 50.0;

/// c(s) = 2^(1-2s) Gamma(1-s) / Gamma(s): the high-frequency constant,
/// S_s(xi) ~ c(s) |xi|^(2s).
double symbol_normalization(double s);

/// Fourier multiplier of the slab Dirichlet-to-Neumann operator:
///   S_s(xi) = c(s) |xi|^(2s) I_{1-s}(|xi|) / (I_{1-s}(|xi|) + (2/pi) sin(s pi) K_{1-s}(|xi|)).
SymbolEval symbol_closed_form(double xi, const FractionalParams& params);

/// tanh(|xi|) |xi|, the constant-density case.
double symbol_half(double xi);

/// Discrete symbol from the per-mode two-point problem on the graded mesh
/// with `my` nodes (gamma <= 0 selects the default grading).
double symbol_ode_oracle(double xi, const FractionalParams& params, int my, double gamma = 0.0);

/// Richardson extrapolation of symbol_ode_oracle over the nested meshes with
/// my, 2my-1 and 4my-3 nodes, using the observed convergence order.
double symbol_ode_extrapolated(double xi, const FractionalParams& params, int my);

/// Normalisation recovered from the ODE route at xi = 1; agrees with
/// symbol_normalization(s) to the extrapolation accuracy.
double calibrated_normalization(const FractionalParams& params, int my = 257);

enum class Regime { low, high };

/// Least-squares slope of log S against log |xi| on [1e-3, 1e-2] (low) or [20, 50] (high).
double fit_asymptotic_exponent(const FractionalParams& params, Regime regime);

}  // namespace wwdtn
