#include "wwdtn/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

#include "wwdtn/error.hpp"

namespace wwdtn {

struct HorizontalTransform::Plans {
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;

  ~Plans() {
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
    fftw_free(real);
    fftw_free(spec);
  }
};

HorizontalTransform::HorizontalTransform(const SlabGrid& grid)
    : n_(grid.n()),
      nx_(grid.nx()),
      reflecting_(grid.lateral() == Lateral::reflecting),
      trace_size_(grid.trace_size()),
      plans_(std::make_unique<Plans>()) {
  np_ = reflecting_ ? 2 * nx_ : nx_;
  period_ = reflecting_ ? 2.0 * grid.box() : grid.box();
  real_size_ = n_ == 1 ? static_cast<std::size_t>(np_) : static_cast<std::size_t>(np_) * np_;
  const std::size_t half = static_cast<std::size_t>(np_ / 2 + 1);
  spectrum_size_ = n_ == 1 ? half : static_cast<std::size_t>(np_) * half;

  // Extended index -> physical index. The physical box sits in the middle of
  // the doubled period; the outer quarters mirror it about x = -L/2 and x = L/2.
  axis_map_.resize(np_);
  const int q = nx_ / 2;
  for (int j = 0; j < np_; ++j) {
    if (!reflecting_) {
      axis_map_[j] = j;
    } else if (j < q) {
      axis_map_[j] = q - 1 - j;
    } else if (j < 3 * q) {
      axis_map_[j] = j - q;
    } else {
      axis_map_[j] = 5 * q - 1 - j;
    }
  }

  plans_->real = fftw_alloc_real(real_size_);
  plans_->spec = fftw_alloc_complex(spectrum_size_);
  if (!plans_->real || !plans_->spec) fail(ErrorKind::overflow, "FFT buffer allocation failed");
  int dims[2] = {np_, np_};
  plans_->r2c = fftw_plan_dft_r2c(n_, dims, plans_->real, plans_->spec, FFTW_ESTIMATE);
  plans_->c2r = fftw_plan_dft_c2r(n_, dims, plans_->spec, plans_->real, FFTW_ESTIMATE);
  if (!plans_->r2c || !plans_->c2r) fail(ErrorKind::singular, "FFTW planning failed");
}

HorizontalTransform::~HorizontalTransform() = default;
HorizontalTransform::HorizontalTransform(HorizontalTransform&&) noexcept = default;
HorizontalTransform& HorizontalTransform::operator=(HorizontalTransform&&) noexcept = default;

void HorizontalTransform::expand(std::span<const double> trace) {
  double* out = plans_->real;
  if (!reflecting_) {
    std::copy(trace.begin(), trace.end(), out);
    return;
  }
  if (n_ == 1) {
    for (int j = 0; j < np_; ++j) out[j] = trace[axis_map_[j]];
    return;
  }
  for (int j1 = 0; j1 < np_; ++j1) {
    const double* row = trace.data() + static_cast<std::size_t>(axis_map_[j1]) * nx_;
    double* dst = out + static_cast<std::size_t>(j1) * np_;
    for (int j2 = 0; j2 < np_; ++j2) dst[j2] = row[axis_map_[j2]];
  }
}

void HorizontalTransform::restrict_to(std::span<double> trace) const {
  const double* in = plans_->real;
  if (!reflecting_) {
    std::copy(in, in + trace_size_, trace.begin());
    return;
  }
  const int q = nx_ / 2;
  if (n_ == 1) {
    for (int i = 0; i < nx_; ++i) trace[i] = in[i + q];
    return;
  }
  for (int i1 = 0; i1 < nx_; ++i1) {
    const double* src = in + static_cast<std::size_t>(i1 + q) * np_ + q;
    std::copy(src, src + nx_, trace.begin() + static_cast<std::ptrdiff_t>(i1) * nx_);
  }
}

void HorizontalTransform::forward(std::span<const double> trace, std::span<cplx> spectrum) {
  require(trace.size() == trace_size_ && spectrum.size() == spectrum_size_, "FFT buffer size mismatch");
  expand(trace);
  fftw_execute(plans_->r2c);
  const auto* s = reinterpret_cast<const cplx*>(plans_->spec);
  std::copy(s, s + spectrum_size_, spectrum.begin());
}

void HorizontalTransform::inverse(std::span<const cplx> spectrum, std::span<double> trace) {
  require(trace.size() == trace_size_ && spectrum.size() == spectrum_size_, "FFT buffer size mismatch");
  auto* s = reinterpret_cast<cplx*>(plans_->spec);
  std::copy(spectrum.begin(), spectrum.end(), s);
  fftw_execute(plans_->c2r);
  const double scale = 1.0 / static_cast<double>(real_size_);
  for (std::size_t k = 0; k < real_size_; ++k) plans_->real[k] *= scale;
  restrict_to(trace);
}

void HorizontalTransform::multiply_derivative(int axis, double sign) {
  auto* s = reinterpret_cast<cplx*>(plans_->spec);
  for (std::size_t h = 0; h < spectrum_size_; ++h)
    s[h] = is_nyquist(h, axis) ? cplx(0.0) : s[h] * cplx(0.0, sign * wavenumber(h, axis));
}

void HorizontalTransform::derivative(std::span<const double> trace, int axis, std::span<double> out) {
  require(axis >= 0 && axis < n_, "derivative axis out of range");
  require(trace.size() == trace_size_ && out.size() == trace_size_, "derivative buffer size mismatch");
  expand(trace);
  fftw_execute(plans_->r2c);
  multiply_derivative(axis, 1.0);
  fftw_execute(plans_->c2r);
  const double scale = 1.0 / static_cast<double>(real_size_);
  for (std::size_t k = 0; k < real_size_; ++k) plans_->real[k] *= scale;
  restrict_to(out);
}

// The physical derivative is R D E with E the even expansion and R the
// restriction to the middle block, so its adjoint is E^T (-D) R^T: zero-pad,
// differentiate with the opposite sign, then fold mirrored nodes back.
void HorizontalTransform::derivative_adjoint(std::span<const double> trace, int axis, std::span<double> out) {
  require(axis >= 0 && axis < n_, "derivative axis out of range");
  require(trace.size() == trace_size_ && out.size() == trace_size_, "derivative buffer size mismatch");
  embed(trace);
  fftw_execute(plans_->r2c);
  multiply_derivative(axis, -1.0);
  fftw_execute(plans_->c2r);
  const double scale = 1.0 / static_cast<double>(real_size_);
  for (std::size_t k = 0; k < real_size_; ++k) plans_->real[k] *= scale;
  fold(out);
}

void HorizontalTransform::embed(std::span<const double> trace) {
  if (!reflecting_) {
    std::copy(trace.begin(), trace.end(), plans_->real);
    return;
  }
  std::fill(plans_->real, plans_->real + real_size_, 0.0);
  const int q = nx_ / 2;
  if (n_ == 1) {
    for (int i = 0; i < nx_; ++i) plans_->real[i + q] = trace[i];
    return;
  }
  for (int i1 = 0; i1 < nx_; ++i1)
    std::copy(trace.begin() + static_cast<std::ptrdiff_t>(i1) * nx_, trace.begin() + static_cast<std::ptrdiff_t>(i1 + 1) * nx_,
              plans_->real + static_cast<std::size_t>(i1 + q) * np_ + q);
}

void HorizontalTransform::fold(std::span<double> trace) const {
  const double* in = plans_->real;
  if (!reflecting_) {
    std::copy(in, in + trace_size_, trace.begin());
    return;
  }
  std::fill(trace.begin(), trace.end(), 0.0);
  if (n_ == 1) {
    for (int j = 0; j < np_; ++j) trace[axis_map_[j]] += in[j];
    return;
  }
  for (int j1 = 0; j1 < np_; ++j1)
    for (int j2 = 0; j2 < np_; ++j2)
      trace[static_cast<std::size_t>(axis_map_[j1]) * nx_ + axis_map_[j2]] += in[static_cast<std::size_t>(j1) * np_ + j2];
}

int HorizontalTransform::frequency(std::size_t h, int axis) const noexcept {
  const std::size_t half = static_cast<std::size_t>(np_ / 2 + 1);
  if (n_ == 1 || axis == 1) return static_cast<int>(h % half);
  const int i1 = static_cast<int>(h / half);
  return i1 <= np_ / 2 ? i1 : i1 - np_;
}

long HorizontalTransform::squared_index(std::size_t h) const noexcept {
  long q = 0;
  for (int ax = 0; ax < n_; ++ax) {
    const long m = frequency(h, ax);
    q += m * m;
  }
  return q;
}

double HorizontalTransform::wavenumber(std::size_t h, int axis) const noexcept {
  return 2.0 * std::numbers::pi / period_ * frequency(h, axis);
}

double HorizontalTransform::wavenumber_norm(std::size_t h) const noexcept {
  return 2.0 * std::numbers::pi / period_ * std::sqrt(static_cast<double>(squared_index(h)));
}

bool HorizontalTransform::is_nyquist(std::size_t h, int axis) const noexcept {
  return std::abs(frequency(h, axis)) == np_ / 2;
}

double HorizontalTransform::multiplicity(std::size_t h) const noexcept {
  const int last = frequency(h, n_ - 1);
  return (last == 0 || last == np_ / 2) ? 1.0 : 2.0;
}

}  // namespace wwdtn
