#pragma once

#include <memory>
#include <span>
#include <vector>

#include "wwdtn/field.hpp"
#include "wwdtn/fourier.hpp"
#include "wwdtn/params.hpp"
#include "wwdtn/vertical.hpp"

namespace wwdtn {

/// Fourier coefficients of a trace (half spectrum of the periodic box; for
/// reflecting grids, of the even extension). Negative frequencies on the last
/// axis are recovered through Hermitian symmetry.
class ModeCoefficients {
 public:
  static ModeCoefficients from_trace(const TraceField& u);

  const SlabGrid& grid() const noexcept { return *grid_; }
  std::span<const cplx> half_spectrum() const noexcept { return coeffs_; }
  /// Coefficient of integer frequency (m1) or (m1, m2), unnormalised.
  cplx coeff(int m1, int m2 = 0) const;
  TraceField to_trace() const;

 private:
  ModeCoefficients(GridPtr grid, std::vector<cplx> coeffs) : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {}
  GridPtr grid_;
  std::vector<cplx> coeffs_;
};

/// Vertical profiles phi_j(|k|) of every distinct |k| on a grid, with the
/// matching discrete symbol. Entries are keyed by the squared integer frequency.
class ModeProfiles {
 public:
  ModeProfiles(const SlabGrid& grid, const HorizontalTransform& transform, const FractionalParams& params);

  const VerticalStencil& stencil() const noexcept { return stencil_; }
  /// Profile for half-spectrum entry h (length my).
  std::span<const double> profile(std::size_t h) const noexcept;
  double symbol(std::size_t h) const noexcept { return symbols_[slot_[h]]; }

 private:
  VerticalStencil stencil_;
  int my_ = 0;
  std::vector<std::size_t> slot_;
  std::vector<double> profiles_;
  std::vector<double> symbols_;
};

/// Closed-form symbol on every half-spectrum entry of `transform`.
std::vector<double> closed_form_multiplier(const HorizontalTransform& transform, const FractionalParams& params);

/// Applies a real Fourier multiplier to traces, reusing one set of FFT plans.
class TraceMultiplier {
 public:
  TraceMultiplier(const SlabGrid& grid, std::vector<double> multiplier);
  TraceMultiplier(const SlabGrid& grid, const FractionalParams& params);

  void apply(std::span<const double> in, std::span<double> out);
  /// Applies 1 / (multiplier + shift).
  void apply_inverse_shifted(std::span<const double> in, double shift, std::span<double> out);
  /// (1/2) <M u, u> over the box, computed from the spectrum.
  double half_quadratic_form(std::span<const double> u);
  const std::vector<double>& multiplier() const noexcept { return multiplier_; }
  HorizontalTransform& transform() noexcept { return transform_; }

 private:
  HorizontalTransform transform_;
  std::vector<double> multiplier_;
  std::vector<cplx> spec_;
  double cell_ = 0.0;
};

/// Energy-minimising extension of u: per-mode vertical solves in Fourier space.
SlabField solve_extension(const TraceField& u, const FractionalParams& params);

/// L_a u as the discrete weighted surface flux of the extension.
TraceField apply_La_flux(const TraceField& u, const FractionalParams& params);

/// L_a u by multiplying each Fourier coefficient by the closed-form symbol.
TraceField apply_La_spectral(const TraceField& u, const FractionalParams& params);

/// Largest row residual of the discrete extension equations over interior and
/// top nodes, each row scaled by its vertical diagonal.
double extension_residual(const SlabField& v, const FractionalParams& params);

}  // namespace wwdtn
