#include <doctest.h>

#include <cmath>
#include <vector>

#include "wwdtn/bessel.hpp"
#include "wwdtn/error.hpp"
#include "wwdtn/symbol.hpp"

using namespace wwdtn;

namespace {
std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
  return out;
}
double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
const double kOrders[] = {0.1, 0.25, 0.5, 0.75, 0.9};
}  // namespace

TEST_CASE("temme gamma combinations against lgamma") {
  for (double mu : {-0.5, -0.3, -1e-3, 0.2, 0.45}) {
    const auto g = detail::temme_gammas(mu);
    CHECK(rel(g.gampl, 1.0 / std::tgamma(1 + mu)) < 1e-14);
    CHECK(rel(g.gammi, 1.0 / std::tgamma(1 - mu)) < 1e-14);
    CHECK(rel(g.gam1, (g.gammi - g.gampl) / (2 * mu)) < 1e-9);
  }
  const auto z = detail::temme_gammas(0.0);
  CHECK(z.gam1 == doctest::Approx(-0.5772156649015329).epsilon(1e-14));
  CHECK(z.gam2 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("bessel I and K against the standard library") {
  for (double nu : {0.1, 0.5, 0.75, 0.9, 1.25, 1.5, 1.9}) {
    for (double x : logspace(1e-3, 60.0, 37)) {
      const auto b = bessel_mod(nu, x);
      CHECK(rel(b.i, std::cyl_bessel_i(nu, x)) < 1e-12);
      CHECK(rel(b.k, std::cyl_bessel_k(nu, x)) < 1e-12);
    }
  }
}

TEST_CASE("bessel half-integer closed forms and derivatives") {
  for (double x : logspace(1e-2, 40.0, 25)) {
    const auto b = bessel_mod(0.5, x);
    CHECK(rel(b.i, std::sqrt(2.0 / (M_PI * x)) * std::sinh(x)) < 1e-13);
    CHECK(rel(b.k, std::sqrt(M_PI / (2.0 * x)) * std::exp(-x)) < 1e-13);
    // I'_nu = I_{nu-1} - nu/x I_nu with I_{-1/2} = sqrt(2/(pi x)) cosh x.
    const double di = std::sqrt(2.0 / (M_PI * x)) * std::cosh(x) - 0.5 / x * b.i;
    CHECK(rel(b.di, di) < 1e-12);
  }
}

TEST_CASE("bessel wronskian holds in scaled form") {
  for (double nu : {0.2, 0.5, 1.3}) {
    for (double x : logspace(1e-3, 1e4, 30)) {
      const auto b = bessel_ik_scaled(nu, x);
      CHECK(rel(b.i * b.dk - b.di * b.k, -1.0 / x) < 1e-13);
    }
  }
}

TEST_CASE("bessel domain and overflow") {
  CHECK_THROWS_AS(bessel_mod(0.5, 0.0), Error);
  CHECK_THROWS_AS(bessel_mod(2.5, 1.0), Error);
  try {
    bessel_mod(0.5, 800.0);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::overflow);
  }
  CHECK(std::isfinite(bessel_ik_scaled(0.5, 800.0).i));
}

TEST_CASE("normalization constant") {
  CHECK(symbol_normalization(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  for (double s : kOrders) {
    const double c = std::pow(2.0, 1 - 2 * s) * std::tgamma(1 - s) / std::tgamma(s);
    CHECK(rel(symbol_normalization(s), c) < 1e-14);
    CHECK(rel(calibrated_normalization(FractionalParams::from_s(s)), c) < 1e-6);
  }
}

TEST_CASE("closed form collapses to xi tanh xi at one half") {
  const auto p = FractionalParams::from_s(0.5);
  for (double xi : logspace(1e-3, 50.0, 40)) CHECK(rel(symbol_closed_form(xi, p).value, symbol_half(xi)) < 1e-10);
  CHECK(symbol_closed_form(0.0, p).value == 0.0);
  CHECK(symbol_closed_form(-2.0, p).value == symbol_closed_form(2.0, p).value);
}

TEST_CASE("closed form matches the extrapolated vertical solve") {
  for (double s : kOrders) {
    const auto p = FractionalParams::from_s(s);
    for (double xi : logspace(1e-3, 50.0, 40))
      CHECK(rel(symbol_ode_extrapolated(xi, p, 257), symbol_closed_form(xi, p).value) < 1e-6);
  }
}

TEST_CASE("low frequency limit is xi^2 / (1 + a)") {
  // Expanding the per-mode problem in k^2: S = k^2 int_0^1 y^a dy + O(k^4).
  for (double s : kOrders) {
    const auto p = FractionalParams::from_s(s);
    const double xi = 1e-4;
    CHECK(rel(symbol_closed_form(xi, p).value, xi * xi / (1 + p.a())) < 1e-6);
  }
}

TEST_CASE("high frequency limit is the power law") {
  for (double s : kOrders) {
    const auto p = FractionalParams::from_s(s);
    const double xi = 49.0;
    CHECK(rel(symbol_closed_form(xi, p).value, symbol_normalization(s) * std::pow(xi, 2 * s)) < 1e-15);
  }
}

TEST_CASE("fitted asymptotic exponents") {
  for (double s : kOrders) {
    const auto p = FractionalParams::from_s(s);
    CHECK(std::abs(fit_asymptotic_exponent(p, Regime::low) - 2.0) <= 0.02);
    CHECK(std::abs(fit_asymptotic_exponent(p, Regime::high) - 2 * s) <= 0.02);
  }
}

TEST_CASE("symbol is increasing in frequency") {
  for (double s : kOrders) {
    const auto p = FractionalParams::from_s(s);
    double prev = 0.0;
    for (double xi : logspace(1e-3, 200.0, 200)) {
      const double v = symbol_closed_form(xi, p).value;
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("ode oracle validates inputs") {
  const auto p = FractionalParams::from_s(0.3);
  CHECK_THROWS_AS(symbol_ode_oracle(1.0, p, 8), Error);
  CHECK(symbol_ode_oracle(0.0, p, 32) == 0.0);
}
