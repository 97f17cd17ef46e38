#include <doctest.h>

#include <cmath>
#include <random>

#include "wwdtn/error.hpp"
#include "wwdtn/fluid.hpp"

using namespace wwdtn;

namespace {
std::vector<Point> ball_points(int dim, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < count) {
    Point p(dim);
    double r2 = 0.0;
    for (auto& x : p) {
      x = nd(rng);
      r2 += x * x;
    }
    const double scale = std::pow(ud(rng), 1.0 / dim) / std::sqrt(r2);
    for (auto& x : p) x *= scale;
    pts.push_back(p);
  }
  return pts;
}
}  // namespace

TEST_CASE("packing example conserves mass but is compressible") {
  const auto f = example_flow("packing", 3);
  const auto pts = ball_points(3, 40, 1);
  CHECK(continuity_residual(f, pts, 0.0) <= 1e-8);
  CHECK(incompressibility_residual(f, pts, 0.0) == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(incompressibility_residual(f, pts, 0.1) == doctest::Approx(3.0 * std::exp(0.3)).epsilon(1e-7));
}

TEST_CASE("leak example is incompressible but loses mass") {
  const auto f = example_flow("leak", 3);
  const auto pts = ball_points(3, 40, 2);
  CHECK(incompressibility_residual(f, pts, 0.0) <= 1e-8);
  CHECK(continuity_residual(f, pts, 0.0) == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(divergence_free_check(f, pts, 0.0) == doctest::Approx(3.0).epsilon(1e-7));
}

TEST_CASE("divergence-free planar flows") {
  const auto pts = ball_points(2, 20, 3);
  CHECK(divergence_free_check(example_flow("shear", 2), pts, 0.0) <= 1e-10);
  CHECK(divergence_free_check(example_flow("rotation", 2), pts, 0.0) <= 1e-10);
  const auto st = example_flow("static", 4);
  const auto p4 = ball_points(4, 10, 4);
  CHECK(continuity_residual(st, p4, 0.0) == 0.0);
  CHECK(incompressibility_residual(st, p4, 0.0) == 0.0);
}

TEST_CASE("analytic callbacks replace the differences") {
  auto f = example_flow("packing", 2);
  f.drho_dt = [](std::span<const double>, double t) { return 2 * std::exp(2 * t); };
  f.grad_rho = [](std::span<const double>, double, std::span<double> g) { g[0] = g[1] = 0.0; };
  f.div_v = [](std::span<const double>, double) { return -2.0; };
  const auto pts = ball_points(2, 10, 5);
  CHECK(continuity_residual(f, pts, 0.3) == 0.0);
  CHECK(incompressibility_residual(f, pts, 0.0) == 2.0);
  CHECK(divergence_free_check(f, pts, 0.0) == 2.0);
}

TEST_CASE("both identities force a divergence-free velocity") {
  // A radial density carried by the rotation satisfies both equations.
  FlowSample f = example_flow("rotation", 2);
  f.rho = [](std::span<const double> X, double) { return 2.0 + X[0] * X[0] + X[1] * X[1]; };
  const auto pts = ball_points(2, 30, 6);
  const double eps = std::max(continuity_residual(f, pts, 0.0), incompressibility_residual(f, pts, 0.0));
  CHECK(eps <= 1e-9);
  CHECK(divergence_free_check(f, pts, 0.0) <= eps / 2.0 + 1e-9);
}

TEST_CASE("flow validation") {
  auto f = example_flow("leak", 2);
  f.h = 1e-2;
  const auto pts = ball_points(2, 3, 7);
  CHECK_THROWS_AS(continuity_residual(f, pts, 0.0), Error);
  f.h = 1e-5;
  f.rho = [](std::span<const double>, double) { return -1.0; };
  CHECK_THROWS_AS(continuity_residual(f, pts, 0.0), Error);
  CHECK_THROWS_AS(example_flow("vortex", 2), Error);
  CHECK_THROWS_AS(example_flow("shear", 3), Error);
}

TEST_CASE("bottom flux") {
  FlowSample f = example_flow("static", 2);
  const std::vector<Point> xs{{-1.0}, {0.0}, {0.7}};
  f.v = [](std::span<const double>, double, std::span<double> out) {
    out[0] = 1.0;
    out[1] = 0.0;
  };
  const BottomProfile flat = [](std::span<const double>, double) { return 2.0; };
  CHECK(bottom_flux_residual(f, flat, xs, 0.0) == 0.0);
  f.v = [](std::span<const double>, double, std::span<double> out) { out[0] = out[1] = 1.0; };
  const BottomProfile ramp = [](std::span<const double> x, double) { return x[0]; };
  CHECK(bottom_flux_residual(f, ramp, xs, 0.0) <= 1e-10);
  f.v = [](std::span<const double>, double, std::span<double> out) {
    out[0] = 0.0;
    out[1] = 1.0;
  };
  f.rho = [](std::span<const double>, double) { return 2.0; };
  CHECK(bottom_flux_residual(f, flat, xs, 0.0) == doctest::Approx(2.0));
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  for (int n : {8, 12, 16}) {
    const auto q = gauss_legendre_unit(n);
    double wsum = 0.0;
    for (double w : q.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
    for (int p = 0; p < 2 * n; ++p) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += q.weights[k] * std::pow(q.nodes[k], p);
      CHECK(acc == doctest::Approx(1.0 / (p + 1)).epsilon(1e-13));
    }
  }
}

TEST_CASE("potential reconstruction") {
  const StaticField grad_x1x2 = [](std::span<const double> X, std::span<double> out) {
    out[0] = X[1];
    out[1] = X[0];
  };
  const Point X{1.0, 2.0};
  CHECK(potential_from_field(grad_x1x2, X) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(potential_from_field(grad_x1x2, Point{0.0, 0.0}) == 0.0);
  const auto g = potential_gradient(grad_x1x2, X);
  CHECK(std::abs(g[0] - 2.0) <= 1e-8);
  CHECK(std::abs(g[1] - 1.0) <= 1e-8);

  const StaticField constant = [](std::span<const double>, std::span<double> out) {
    out[0] = 0.5;
    out[1] = -1.5;
    out[2] = 2.0;
  };
  const Point Y{0.3, 0.2, -0.4};
  CHECK(potential_from_field(constant, Y) == doctest::Approx(0.5 * 0.3 - 1.5 * 0.2 - 2.0 * 0.4).epsilon(1e-14));

  const StaticField rot = [](std::span<const double> Z, std::span<double> out) {
    out[0] = -Z[1];
    out[1] = Z[0];
  };
  const auto gr = potential_gradient(rot, Point{1.0, 0.0});
  CHECK(std::hypot(gr[0] - 0.0, gr[1] - 1.0) >= 0.5);
  CHECK_THROWS_AS(potential_from_field(rot, X, 4), Error);
}

TEST_CASE("gradient consistency for random cubic gradient fields") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 5; ++trial) {
    // u = sum_{|alpha| <= 3} c_alpha x^alpha in 3D, v = grad u.
    std::vector<std::array<int, 3>> powers;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        for (int c = 0; a + b + c <= 3; ++c) powers.push_back({a, b, c});
    std::vector<double> coef(powers.size());
    for (auto& c : coef) c = nd(rng);
    const StaticField v = [&](std::span<const double> X, std::span<double> out) {
      out[0] = out[1] = out[2] = 0.0;
      for (std::size_t k = 0; k < powers.size(); ++k) {
        const auto& p = powers[k];
        for (int i = 0; i < 3; ++i) {
          if (p[i] == 0) continue;
          double term = coef[k] * p[i];
          for (int j = 0; j < 3; ++j) term *= std::pow(X[j], p[j] - (j == i ? 1 : 0));
          out[i] += term;
        }
      }
    };
    for (const auto& X : ball_points(3, 50, 100 + trial)) {
      const auto g = potential_gradient(v, X);
      std::vector<double> want(3);
      v(X, want);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(g[i] - want[i]) <= 1e-8);
      CHECK(std::abs(triangle_circulation(v, X, 0, 0.1)) <= 1e-12);
    }
  }
}

TEST_CASE("circulation detects rotation") {
  const StaticField rot = [](std::span<const double> Z, std::span<double> out) {
    out[0] = -Z[1];
    out[1] = Z[0];
  };
  // Twice the enclosed area of the triangle (0, (1, 0), (1, 0.5)).
  CHECK(triangle_circulation(rot, Point{1.0, 0.0}, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-13));
}
