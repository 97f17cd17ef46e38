#pragma once

#include <array>
#include <span>
#include <vector>

#include "wwdtn/field.hpp"

namespace wwdtn {

enum class Monotonicity { increasing, constant, non_monotone };

const char* to_string(Monotonicity m) noexcept;

/// Classifies a sampled profile with tolerance tau = 1e-8 (max - min + 1e-300):
/// constant if every forward difference is within tau, non-monotone if any
/// falls below -tau, increasing otherwise.
Monotonicity monotonicity_check(std::span<const double> profile);

/// Principal direction of the averaged gradient outer product of a 2D trace,
/// oriented so the mean directional derivative is non-negative.
std::array<double, 2> fit_direction(const TraceField& u);

/// Binned profile u0 along omega: abscissae t (bin centroids of omega . x) and bin means.
struct Profile1D {
  std::vector<double> t;
  std::vector<double> value;
};

Profile1D one_d_profile(const TraceField& u, std::array<double, 2> omega);

/// ||u - u0(omega . x)||_2 / ||u - mean(u)||_2 with u0 from one_d_profile.
double one_d_residual(const TraceField& u, std::array<double, 2> omega);

struct SymmetryReport {
  std::array<double, 2> omega{1.0, 0.0};
  double residual = 0.0;
  Monotonicity monotone = Monotonicity::constant;
  Profile1D profile;
};

SymmetryReport symmetry_report(const TraceField& u);

}  // namespace wwdtn
