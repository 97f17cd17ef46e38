#include <doctest.h>

#include <cmath>
#include <random>

#include "wwdtn/error.hpp"
#include "wwdtn/symmetry.hpp"

using namespace wwdtn;

namespace {

GridPtr plane(int nx = 96, double box = 24.0) { return make_grid({2, box, nx, 4}, FractionalParams::from_s(0.5)); }

TraceField along(const GridPtr& g, std::array<double, 2> w, double (*prof)(double)) {
  TraceField u(g);
  for (std::size_t f = 0; f < u.size(); ++f) {
    const auto x = g->position(f);
    u[f] = prof(w[0] * x[0] + w[1] * x[1]);
  }
  return u;
}

double layer_like(double t) { return std::tanh(t / 2); }

double angle_between(std::array<double, 2> a, std::array<double, 2> b) {
  return std::abs(std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]));
}

}  // namespace

TEST_CASE("monotonicity classification") {
  const std::vector<double> up{0, 1, 2, 3};
  const std::vector<double> flat{2, 2, 2, 2};
  const std::vector<double> dip{0, 1, 0.5, 3};
  CHECK(monotonicity_check(up) == Monotonicity::increasing);
  CHECK(monotonicity_check(flat) == Monotonicity::constant);
  CHECK(monotonicity_check(dip) == Monotonicity::non_monotone);
  // Plateaus within the tolerance do not break monotonicity.
  const std::vector<double> plateau{-1, -1, -1 + 1e-12, 0, 1, 1};
  CHECK(monotonicity_check(plateau) == Monotonicity::increasing);
  const std::vector<double> small_dip{-1, -1 + 1e-6, -1, 0, 1};
  CHECK(monotonicity_check(small_dip) == Monotonicity::non_monotone);
  const std::vector<double> two{0, 1};
  CHECK_THROWS_AS(monotonicity_check(two), Error);
  CHECK(std::string(to_string(Monotonicity::non_monotone)) == "non-monotone");
}

TEST_CASE("exact one-dimensional inputs") {
  auto g = plane();
  const auto u = along(g, {1.0, 0.0}, layer_like);
  const auto w = fit_direction(u);
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(w[1]) < 1e-12);
  CHECK(one_d_residual(u, w) < 1e-12);
  CHECK(one_d_residual(u, {0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));

  const double r = 1 / std::sqrt(2.0);
  const auto d = along(g, {r, r}, layer_like);
  const auto wd = fit_direction(d);
  CHECK(std::abs(wd[0] - r) <= 1e-8);
  CHECK(std::abs(wd[1] - r) <= 1e-8);
  CHECK(one_d_residual(d, {r, r}) <= 1e-6);

  const auto rep = symmetry_report(d);
  CHECK(rep.monotone == Monotonicity::increasing);
  CHECK(std::hypot(rep.omega[0], rep.omega[1]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("direction sign follows the mean derivative") {
  auto g = plane();
  const auto u = along(g, {-0.6, 0.8}, layer_like);
  const auto w = fit_direction(u);
  CHECK(w[0] == doctest::Approx(-0.6).epsilon(1e-4));
  CHECK(w[1] == doctest::Approx(0.8).epsilon(1e-4));
}

TEST_CASE("radial bump is not one-dimensional") {
  auto g = plane();
  TraceField u(g);
  for (std::size_t f = 0; f < u.size(); ++f) {
    const auto x = g->position(f);
    u[f] = std::exp(-(x[0] * x[0] + x[1] * x[1]) / 8);
  }
  const auto rep = symmetry_report(u);
  CHECK(rep.residual > 0.1);
  CHECK(rep.monotone == Monotonicity::non_monotone);
}

TEST_CASE("constant fields and bad inputs") {
  auto g = plane(16);
  TraceField c(g, 3.0);
  CHECK_THROWS_AS(fit_direction(c), Error);
  CHECK(one_d_residual(c, {1.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(one_d_residual(c, {1.0, 1.0}), Error);
  auto line = make_grid({1, 4.0, 16, 4}, FractionalParams::from_s(0.5));
  CHECK_THROWS_AS(fit_direction(TraceField(line, 1.0)), Error);
}

TEST_CASE("rotation equivariance") {
  auto g = plane(128, 32.0);
  for (double theta : {0.1, 0.4, 0.9, 1.3, 2.2, 3.0, 4.4, 5.9}) {
    const std::array<double, 2> w{std::cos(theta), std::sin(theta)};
    const auto fit = fit_direction(along(g, w, layer_like));
    CHECK(angle_between(fit, w) <= 1e-3);
  }
}

TEST_CASE("fitted direction minimizes the residual over test directions") {
  auto g = plane(128, 32.0);
  const double theta = 0.37;
  const auto u = along(g, {std::cos(theta), std::sin(theta)}, layer_like);
  const auto w = fit_direction(u);
  const double best = one_d_residual(u, w);
  for (int k = 0; k < 32; ++k) {
    const double phi = 2 * M_PI * k / 32;
    CHECK(best <= one_d_residual(u, {std::cos(phi), std::sin(phi)}));
  }
}

TEST_CASE("fit is scale invariant") {
  auto g = plane();
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd;
  TraceField u = along(g, {0.8, 0.6}, layer_like);
  for (auto& x : u.values()) x += 0.05 * nd(rng);
  const auto w = fit_direction(u);
  for (double c : {1e-3, 0.5, 7.0, 1e4}) {
    TraceField v(g);
    for (std::size_t f = 0; f < u.size(); ++f) v[f] = c * u[f];
    const auto wc = fit_direction(v);
    CHECK(angle_between(w, wc) <= 1e-12);
  }
}
