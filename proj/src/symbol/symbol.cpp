#include "wwdtn/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wwdtn/bessel.hpp"
#include "wwdtn/error.hpp"
#include "wwdtn/grid.hpp"
#include "wwdtn/vertical.hpp"

namespace wwdtn {

namespace {

// I_{1-s}(x) / I_{s-1}(x), written with the non-negative pair I, K so that no
// cancellation occurs: I_{s-1} = I_{1-s} + (2/pi) sin(s pi) K_{1-s}.
double order_ratio(double x, double s) {
  const auto b = bessel_ik_scaled(1.0 - s, x);
  const double k_over_i = b.k / b.i * std::exp(-2.0 * x);
  return 1.0 / (1.0 + 2.0 / std::numbers::pi * std::sin(s * std::numbers::pi) * k_over_i);
}

}  // namespace

double symbol_normalization(double s) {
  return std::pow(2.0, 1.0 - 2.0 * s) * std::tgamma(1.0 - s) / std::tgamma(s);
}

SymbolEval symbol_closed_form(double xi, const FractionalParams& params) {
  require(std::isfinite(xi), "frequency must be finite");
  const double s = params.s();
  const double x = std::abs(xi);
  SymbolEval out{xi, s, 0.0};
  if (x == 0.0) return out;
  const double power = symbol_normalization(s) * std::pow(x, 2.0 * s);
  out.value = x > kSymbolPowerLawCutoff ? power : power * order_ratio(x, s);
  return out;
}

double symbol_half(double xi) {
  require(std::isfinite(xi), "frequency must be finite");
  return std::tanh(xi) * xi;
}

double symbol_ode_oracle(double xi, const FractionalParams& params, int my, double gamma) {
  require(std::isfinite(xi), "frequency must be finite");
  require(my >= 16, "ODE oracle needs at least 16 vertical nodes");
  const double g = gamma > 0.0 ? gamma : params.default_grading();
  VerticalStencil stencil(make_graded_mesh(my, g), params);
  return stencil.symbol(xi * xi);
}

double symbol_ode_extrapolated(double xi, const FractionalParams& params, int my) {
  const double coarse = symbol_ode_oracle(xi, params, my);
  const double mid = symbol_ode_oracle(xi, params, 2 * my - 1);
  const double fine = symbol_ode_oracle(xi, params, 4 * my - 3);
  const double d1 = coarse - mid;
  const double d2 = mid - fine;
  double order = 2.0;
  const double floor = 1e-14 * std::abs(fine);
  if (std::abs(d1) > floor && std::abs(d2) > floor && d1 * d2 > 0.0)
    order = std::clamp(std::log2(d1 / d2), 1.0, 3.0);
  return fine + (fine - mid) / (std::pow(2.0, order) - 1.0);
}

double calibrated_normalization(const FractionalParams& params, int my) {
  const double s = params.s();
  return symbol_ode_extrapolated(1.0, params, my) / order_ratio(1.0, s);
}

double fit_asymptotic_exponent(const FractionalParams& params, Regime regime) {
  const double lo = regime == Regime::low ? 1e-3 : 20.0;
  const double hi = regime == Regime::low ? 1e-2 : 50.0;
  constexpr int kSamples = 50;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double t = std::log(lo) + (std::log(hi) - std::log(lo)) * i / (kSamples - 1);
    const double v = std::log(symbol_closed_form(std::exp(t), params).value);
    sx += t;
    sy += v;
    sxx += t * t;
    sxy += t * v;
  }
  return (kSamples * sxy - sx * sy) / (kSamples * sxx - sx * sx);
}

}  // namespace wwdtn
