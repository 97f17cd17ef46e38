#include "wwdtn/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "wwdtn/error.hpp"
#include "wwdtn/symbol.hpp"

namespace wwdtn {

ModeCoefficients ModeCoefficients::from_trace(const TraceField& u) {
  HorizontalTransform tr(u.grid());
  std::vector<cplx> c(tr.spectrum_size());
  tr.forward(u.values(), c);
  return ModeCoefficients(u.grid_ptr(), std::move(c));
}

cplx ModeCoefficients::coeff(int m1, int m2) const {
  const int np = grid_->lateral() == Lateral::reflecting ? 2 * grid_->nx() : grid_->nx();
  const int half = np / 2 + 1;
  auto wrap = [np](int m) { return ((m % np) + np) % np; };
  if (grid_->n() == 1) {
    const int m = wrap(m1);
    return m < half ? coeffs_[m] : std::conj(coeffs_[np - m]);
  }
  const int i1 = wrap(m1);
  const int i2 = wrap(m2);
  if (i2 < half) return coeffs_[static_cast<std::size_t>(i1) * half + i2];
  return std::conj(coeffs_[static_cast<std::size_t>(wrap(-m1)) * half + (np - i2)]);
}

TraceField ModeCoefficients::to_trace() const {
  HorizontalTransform tr(*grid_);
  TraceField u(grid_);
  tr.inverse(coeffs_, u.values());
  return u;
}

ModeProfiles::ModeProfiles(const SlabGrid& grid, const HorizontalTransform& transform, const FractionalParams& params)
    : stencil_(grid.y_nodes(), params), my_(grid.my()) {
  const double unit = 2.0 * std::numbers::pi / transform.period();
  std::unordered_map<long, std::size_t> index;
  slot_.resize(transform.spectrum_size());
  for (std::size_t h = 0; h < slot_.size(); ++h) {
    const long q = transform.squared_index(h);
    auto [it, fresh] = index.try_emplace(q, symbols_.size());
    if (fresh) {
      profiles_.resize(profiles_.size() + my_);
      std::span<double> prof(profiles_.data() + profiles_.size() - my_, my_);
      symbols_.push_back(stencil_.solve_mode(unit * unit * static_cast<double>(q), prof));
    }
    slot_[h] = it->second;
  }
}

std::span<const double> ModeProfiles::profile(std::size_t h) const noexcept {
  return std::span<const double>(profiles_.data() + slot_[h] * my_, my_);
}

std::vector<double> closed_form_multiplier(const HorizontalTransform& transform, const FractionalParams& params) {
  std::vector<double> out(transform.spectrum_size());
  std::unordered_map<long, double> cache;
  for (std::size_t h = 0; h < out.size(); ++h) {
    const long q = transform.squared_index(h);
    auto it = cache.find(q);
    if (it == cache.end())
      it = cache.emplace(q, symbol_closed_form(transform.wavenumber_norm(h), params).value).first;
    out[h] = it->second;
  }
  return out;
}

TraceMultiplier::TraceMultiplier(const SlabGrid& grid, std::vector<double> multiplier)
    : transform_(grid), multiplier_(std::move(multiplier)), cell_(grid.cell_measure()) {
  require(multiplier_.size() == transform_.spectrum_size(), "multiplier does not match the spectrum");
  spec_.resize(transform_.spectrum_size());
}

TraceMultiplier::TraceMultiplier(const SlabGrid& grid, const FractionalParams& params)
    : transform_(grid), cell_(grid.cell_measure()) {
  multiplier_ = closed_form_multiplier(transform_, params);
  spec_.resize(transform_.spectrum_size());
}

void TraceMultiplier::apply(std::span<const double> in, std::span<double> out) {
  transform_.forward(in, spec_);
  for (std::size_t h = 0; h < spec_.size(); ++h) spec_[h] *= multiplier_[h];
  transform_.inverse(spec_, out);
}

void TraceMultiplier::apply_inverse_shifted(std::span<const double> in, double shift, std::span<double> out) {
  transform_.forward(in, spec_);
  for (std::size_t h = 0; h < spec_.size(); ++h) spec_[h] /= multiplier_[h] + shift;
  transform_.inverse(spec_, out);
}

double TraceMultiplier::half_quadratic_form(std::span<const double> u) {
  transform_.forward(u, spec_);
  double acc = 0.0;
  for (std::size_t h = 0; h < spec_.size(); ++h) acc += transform_.multiplicity(h) * multiplier_[h] * std::norm(spec_[h]);
  const double np = static_cast<double>(transform_.points());
  const double real_size = transform_.dim() == 1 ? np : np * np;
  // Parseval on the periodic box, then back to the physical box for reflecting grids.
  return 0.5 * cell_ * acc / real_size * (static_cast<double>(transform_.trace_size()) / real_size);
}

SlabField solve_extension(const TraceField& u, const FractionalParams& params) {
  const SlabGrid& grid = u.grid();
  HorizontalTransform tr(grid);
  ModeProfiles modes(grid, tr, params);
  std::vector<cplx> uhat(tr.spectrum_size());
  tr.forward(u.values(), uhat);
  std::vector<double> values(grid.slab_size());
  std::vector<cplx> level(tr.spectrum_size());
  const std::size_t m = grid.trace_size();
  for (int j = 0; j < grid.my(); ++j) {
    if (j == 0) {
      std::copy(u.values().begin(), u.values().end(), values.begin());
      continue;
    }
    for (std::size_t h = 0; h < level.size(); ++h) level[h] = uhat[h] * modes.profile(h)[j];
    tr.inverse(level, std::span<double>(values.data() + j * m, m));
  }
  return SlabField(u.grid_ptr(), std::move(values));
}

TraceField apply_La_flux(const TraceField& u, const FractionalParams& params) {
  const SlabGrid& grid = u.grid();
  HorizontalTransform tr(grid);
  ModeProfiles modes(grid, tr, params);
  std::vector<cplx> uhat(tr.spectrum_size());
  tr.forward(u.values(), uhat);
  // The surface flux of each mode's extension, -y^a phi'(0), is the discrete
  // conservation sum k^2 sum_j m_j phi_j held in ModeProfiles::symbol.
  for (std::size_t h = 0; h < uhat.size(); ++h) uhat[h] *= modes.symbol(h);
  TraceField out(u.grid_ptr());
  tr.inverse(uhat, out.values());
  return out;
}

TraceField apply_La_spectral(const TraceField& u, const FractionalParams& params) {
  TraceMultiplier op(u.grid(), params);
  TraceField out(u.grid_ptr());
  op.apply(u.values(), out.values());
  return out;
}

double extension_residual(const SlabField& v, const FractionalParams& params) {
  const SlabGrid& grid = v.grid();
  HorizontalTransform tr(grid);
  VerticalStencil st(grid.y_nodes(), params);
  const auto& kap = st.kappa();
  const auto& mass = st.mass();
  const std::size_t m = grid.trace_size();
  std::vector<cplx> spec(tr.spectrum_size());
  std::vector<double> neg_lap(m);
  double worst = 0.0;
  for (int j = 1; j < grid.my(); ++j) {
    tr.forward(v.level(j), spec);
    for (std::size_t h = 0; h < spec.size(); ++h) {
      const double k = tr.wavenumber_norm(h);
      spec[h] *= k * k;
    }
    tr.inverse(spec, neg_lap);
    const double left = kap[j - 1];
    const double right = j + 1 < grid.my() ? kap[j] : 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double r = left * (v.at(j, i) - v.at(j - 1, i)) + mass[j] * neg_lap[i];
      if (right != 0.0) r += right * (v.at(j, i) - v.at(j + 1, i));
      worst = std::max(worst, std::abs(r) / (left + right));
    }
  }
  return worst;
}

}  // namespace wwdtn
