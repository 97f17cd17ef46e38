#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "wwdtn/grid.hpp"

namespace wwdtn {

using cplx = std::complex<double>;

/// Real-to-half-complex FFT on the horizontal nodes of a grid. Reflecting
/// grids are transformed through their even extension (twice the nodes and
/// twice the period per axis), so callers see a single periodic spectrum.
///
/// Spectra use the r2c layout: all frequencies on the leading axes, the
/// non-negative half on the last axis. The inverse is normalised.
class HorizontalTransform {
 public:
  explicit HorizontalTransform(const SlabGrid& grid);
  ~HorizontalTransform();
  HorizontalTransform(HorizontalTransform&&) noexcept;
  HorizontalTransform& operator=(HorizontalTransform&&) noexcept;
  HorizontalTransform(const HorizontalTransform&) = delete;
  HorizontalTransform& operator=(const HorizontalTransform&) = delete;

  int dim() const noexcept { return n_; }
  /// Nodes per axis of the periodic (possibly extended) box.
  int points() const noexcept { return np_; }
  double period() const noexcept { return period_; }
  std::size_t spectrum_size() const noexcept { return spectrum_size_; }
  std::size_t trace_size() const noexcept { return trace_size_; }

  void forward(std::span<const double> trace, std::span<cplx> spectrum);
  void inverse(std::span<const cplx> spectrum, std::span<double> trace);

  /// Spectral derivative along `axis`; the Nyquist column is dropped.
  void derivative(std::span<const double> trace, int axis, std::span<double> out);
  /// Adjoint of derivative() in the plain sum inner product on the physical nodes.
  void derivative_adjoint(std::span<const double> trace, int axis, std::span<double> out);

  /// Integer frequency of spectrum entry h along `axis`.
  int frequency(std::size_t h, int axis) const noexcept;
  /// |k|^2 in units of (2 pi / period)^2.
  long squared_index(std::size_t h) const noexcept;
  double wavenumber(std::size_t h, int axis) const noexcept;
  double wavenumber_norm(std::size_t h) const noexcept;
  bool is_nyquist(std::size_t h, int axis) const noexcept;
  /// Number of real degrees of freedom a half-spectrum entry stands for
  /// (1 for self-conjugate columns, 2 otherwise); used for Parseval sums.
  double multiplicity(std::size_t h) const noexcept;

 private:
  struct Plans;
  void expand(std::span<const double> trace);
  void restrict_to(std::span<double> trace) const;
  void embed(std::span<const double> trace);
  void fold(std::span<double> trace) const;
  void multiply_derivative(int axis, double sign);

  int n_ = 1;
  int nx_ = 0;
  int np_ = 0;
  bool reflecting_ = false;
  double period_ = 0.0;
  std::size_t trace_size_ = 0;
  std::size_t real_size_ = 0;
  std::size_t spectrum_size_ = 0;
  std::vector<int> axis_map_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace wwdtn
