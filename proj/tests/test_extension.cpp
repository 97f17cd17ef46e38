#include <doctest.h>

#include <cmath>
#include <random>

#include "wwdtn/extension.hpp"
#include "wwdtn/symbol.hpp"

using namespace wwdtn;

namespace {

double sup_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TraceField cosine(const GridPtr& g, double k) {
  TraceField u(g);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::cos(k * g->position(i)[0]);
  return u;
}

// Random trace with modes up to |m| <= band on a periodic box.
TraceField band_limited(const GridPtr& g, int band, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  TraceField u(g);
  const double w = 2 * M_PI / g->box();
  for (int m1 = 0; m1 <= band; ++m1) {
    for (int m2 = g->n() == 1 ? 0 : -band; m2 <= (g->n() == 1 ? 0 : band); ++m2) {
      const double c = nd(rng), d = nd(rng);
      for (std::size_t i = 0; i < u.size(); ++i) {
        const auto x = g->position(i);
        const double ph = w * (m1 * x[0] + m2 * x[1]);
        u[i] += c * std::cos(ph) + d * std::sin(ph);
      }
    }
  }
  return u;
}

}  // namespace

TEST_CASE("mode coefficients: hermitian symmetry and round trip") {
  std::mt19937_64 rng(3);
  for (int n : {1, 2}) {
    for (auto lat : {Lateral::periodic, Lateral::reflecting}) {
      auto g = make_grid({n, 5.0, 16, 8, 0.0, lat}, FractionalParams::from_s(0.3));
      std::normal_distribution<double> nd;
      TraceField u(g);
      for (auto& x : u.values()) x = nd(rng);
      const auto c = ModeCoefficients::from_trace(u);
      for (int m1 = -5; m1 <= 5; ++m1)
        for (int m2 = -5; m2 <= 5; ++m2) {
          const cplx a = c.coeff(m1, n == 1 ? 0 : m2);
          const cplx b = std::conj(c.coeff(-m1, n == 1 ? 0 : -m2));
          CHECK(std::abs(a - b) < 1e-12);
        }
      CHECK(sup_diff(c.to_trace().values(), u.values()) < 1e-12);
    }
  }
}

TEST_CASE("constant traces extend to constants with zero flux") {
  for (double a : {-0.5, 0.0, 0.5}) {
    const auto p = FractionalParams::from_a(a);
    auto g = make_grid({2, 4.0, 8, 17}, p);
    TraceField u(g, 1.75);
    const auto v = solve_extension(u, p);
    for (double x : v.values()) CHECK(x == doctest::Approx(1.75).epsilon(1e-14));
    const auto flux = apply_La_flux(u, p);
    const auto spec = apply_La_spectral(u, p);
    for (double x : flux.values()) CHECK(std::abs(x) < 1e-13);
    for (double x : spec.values()) CHECK(std::abs(x) < 1e-13);
  }
}

TEST_CASE("constant density extension is the hyperbolic cosine profile") {
  const auto p = FractionalParams::from_a(0.0);
  auto g = make_grid({1, 2 * M_PI, 32, 256}, p);
  for (double k : {1.0, 2.0, 4.0}) {
    const auto u = cosine(g, k);
    const auto v = solve_extension(u, p);
    double err = 0.0;
    for (int j = 0; j < g->my(); ++j) {
      const double y = g->y_nodes()[j];
      for (std::size_t i = 0; i < u.size(); ++i)
        err = std::max(err, std::abs(v.at(j, i) - u[i] * std::cosh(k * (1 - y)) / std::cosh(k)));
    }
    CHECK(err <= 1e-4);
    const auto flux = apply_La_flux(u, p);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(flux[i] == doctest::Approx(k * std::tanh(k) * u[i]).epsilon(1e-4));
  }
}

TEST_CASE("extension satisfies the discrete equations") {
  std::mt19937_64 rng(5);
  for (double a : {-0.6, 0.0, 0.7}) {
    const auto p = FractionalParams::from_a(a);
    for (int n : {1, 2}) {
      auto g = make_grid({n, 6.0, 16, 33}, p);
      const auto u = band_limited(g, 4, rng);
      double norm = 0.0;
      for (double x : u.values()) norm = std::max(norm, std::abs(x));
      CHECK(extension_residual(solve_extension(u, p), p) <= 1e-10 * norm);
    }
  }
}

TEST_CASE("extension is linear") {
  const auto p = FractionalParams::from_s(0.35);
  auto g = make_grid({1, 2 * M_PI, 32, 40}, p);
  const auto u1 = cosine(g, 1.0), u2 = cosine(g, 3.0);
  TraceField sum(g);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = u1[i] + u2[i];
  const auto v1 = solve_extension(u1, p), v2 = solve_extension(u2, p), vs = solve_extension(sum, p);
  for (std::size_t f = 0; f < vs.values().size(); ++f)
    CHECK(std::abs(vs.values()[f] - v1.values()[f] - v2.values()[f]) < 1e-12);
}

TEST_CASE("single modes are eigenfunctions of the spectral operator") {
  const auto p = FractionalParams::from_s(0.7);
  auto g = make_grid({1, 2 * M_PI, 32, 8}, p);
  for (double k : {1.0, 5.0}) {
    const auto u = cosine(g, k);
    const auto lu = apply_La_spectral(u, p);
    const double sk = symbol_closed_form(k, p).value;
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(std::abs(lu[i] - sk * u[i]) < 1e-12);
  }
}

TEST_CASE("flux and spectral operators agree within the mesh envelope") {
  std::mt19937_64 rng(9);
  for (double s : {0.25, 0.5, 0.75}) {
    const auto p = FractionalParams::from_s(s);
    auto g = make_grid({1, 8.0, 32, 257}, p);
    const auto u = band_limited(g, 6, rng);
    const auto f = apply_La_flux(u, p), sp = apply_La_spectral(u, p);
    double scale = 0.0;
    for (double x : sp.values()) scale = std::max(scale, std::abs(x));
    CHECK(sup_diff(f.values(), sp.values()) < 1e-4 * scale);
  }
}

TEST_CASE("self-adjointness and positivity") {
  std::mt19937_64 rng(13);
  for (double a : {-0.5, 0.0, 0.5}) {
    const auto p = FractionalParams::from_a(a);
    for (int n : {1, 2}) {
      auto g = make_grid({n, 7.0, 16, 33}, p);
      for (int trial = 0; trial < 4; ++trial) {
        const auto u = band_limited(g, 5, rng), w = band_limited(g, 5, rng);
        for (auto op : {apply_La_flux, apply_La_spectral}) {
          const auto lu = op(u, p), lw = op(w, p);
          const double lhs = inner(lu, w), rhs = inner(u, lw);
          CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(std::abs(lhs), 1e-300) + 1e-13);
          CHECK(inner(lu, u) > 0.0);
        }
      }
    }
  }
}

TEST_CASE("trace multiplier quadratic form matches the inner product") {
  std::mt19937_64 rng(17);
  for (auto lat : {Lateral::periodic, Lateral::reflecting}) {
    for (int n : {1, 2}) {
      const auto p = FractionalParams::from_s(0.4);
      auto g = make_grid({n, 5.0, 16, 8, 0.0, lat}, p);
      std::normal_distribution<double> nd;
      TraceField u(g);
      for (auto& x : u.values()) x = nd(rng);
      TraceMultiplier op(*g, p);
      TraceField lu(g);
      op.apply(u.values(), lu.values());
      CHECK(op.half_quadratic_form(u.values()) == doctest::Approx(0.5 * inner(lu, u)).epsilon(1e-12));
      TraceField shifted(g), back(g);
      for (std::size_t i = 0; i < u.size(); ++i) shifted[i] = lu[i] + 0.5 * u[i];
      op.apply_inverse_shifted(shifted.values(), 0.5, back.values());
      const double worst = sup_diff(back.values(), u.values());
      CHECK(worst < 1e-9);
    }
  }
}
