#include "wwdtn/vertical.hpp"

#include <cmath>
#include <vector>

#include "wwdtn/error.hpp"

namespace wwdtn {

VerticalStencil::VerticalStencil(std::vector<double> y, const FractionalParams& params) : y_(std::move(y)) {
  const double a = params.a();
  const int m = static_cast<int>(y_.size());
  require(m >= 3, "vertical stencil needs at least 3 nodes");
  auto prim_inv = [a](double t) { return std::pow(t, 1.0 - a); };
  auto prim = [a](double t) { return std::pow(t, 1.0 + a); };
  kappa_.resize(m - 1);
  for (int j = 0; j + 1 < m; ++j) {
    const double span = prim_inv(y_[j + 1]) - prim_inv(y_[j]);
    if (!(span > 0.0)) fail(ErrorKind::singular, "vertical mesh is not strictly increasing");
    kappa_[j] = (1.0 - a) / span;
  }
  mass_.resize(m);
  for (int j = 0; j < m; ++j) {
    const double lo = j == 0 ? 0.0 : 0.5 * (y_[j - 1] + y_[j]);
    const double hi = j == m - 1 ? 1.0 : 0.5 * (y_[j] + y_[j + 1]);
    mass_[j] = (prim(hi) - prim(lo)) / (1.0 + a);
  }
}

double VerticalStencil::solve_mode(double k2, std::span<double> profile) const {
  const int m = size();
  require(static_cast<int>(profile.size()) == m, "profile length does not match the stencil");
  profile[0] = 1.0;
  if (k2 == 0.0) {
    for (int j = 1; j < m; ++j) profile[j] = 1.0;
    return 0.0;
  }
  // Thomas elimination on rows 1..m-1; the matrix is a symmetric M-matrix.
  // `profile` holds the modified right-hand side, `cp` the upper multipliers.
  thread_local std::vector<double> cp;
  cp.assign(m, 0.0);
  double prev_c = 0.0;
  double prev_r = 0.0;
  for (int j = 1; j < m; ++j) {
    const double left = kappa_[j - 1];
    const double right = j + 1 < m ? kappa_[j] : 0.0;
    const double diag = left + right + k2 * mass_[j];
    const double rhs = j == 1 ? left : 0.0;
    const double lower = j == 1 ? 0.0 : -left;
    const double piv = diag - lower * prev_c;
    if (!(piv > 0.0) || !std::isfinite(piv)) fail(ErrorKind::singular, "per-mode vertical solve hit a non-positive pivot");
    prev_c = -right / piv;
    prev_r = (rhs - lower * prev_r) / piv;
    cp[j] = prev_c;
    profile[j] = prev_r;
  }
  for (int j = m - 2; j >= 1; --j) profile[j] -= cp[j] * profile[j + 1];
  double flux = 0.0;
  for (int j = 0; j < m; ++j) flux += mass_[j] * profile[j];
  return k2 * flux;
}

double VerticalStencil::symbol(double k2) const {
  thread_local std::vector<double> work;
  work.resize(y_.size());
  return solve_mode(k2, work);
}

double VerticalStencil::scaled_residual(double k2, std::span<const double> p, int j) const {
  const int m = size();
  const double left = kappa_[j - 1];
  const double right = j + 1 < m ? kappa_[j] : 0.0;
  const double diag = left + right + k2 * mass_[j];
  double r = diag * p[j] - left * p[j - 1];
  if (j + 1 < m) r -= right * p[j + 1];
  return r / diag;
}

}  // namespace wwdtn
