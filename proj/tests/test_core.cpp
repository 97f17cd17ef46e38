#include <doctest.h>

#include <cmath>
#include <random>

#include "wwdtn/error.hpp"
#include "wwdtn/field.hpp"
#include "wwdtn/fourier.hpp"
#include "wwdtn/grid.hpp"
#include "wwdtn/params.hpp"
#include "wwdtn/vertical.hpp"

using namespace wwdtn;

TEST_CASE("params reject the closed ends") {
  CHECK_THROWS_AS(FractionalParams::from_a(1.0), Error);
  CHECK_THROWS_AS(FractionalParams::from_a(-1.0), Error);
  CHECK_THROWS_AS(FractionalParams::from_s(0.0), Error);
  CHECK_THROWS_AS(FractionalParams::from_s(1.0), Error);
  CHECK_THROWS_AS(FractionalParams::from_a(std::nan("")), Error);
  CHECK(FractionalParams::from_a(0.0).s() == 0.5);
}

TEST_CASE("params round trip over sampled values") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-0.999, 0.999);
  for (int i = 0; i < 64; ++i) {
    const double a = dist(rng);
    const auto p = FractionalParams::from_a(a);
    CHECK(FractionalParams::from_s(p.s()).a() == doctest::Approx(a).epsilon(1e-15));
    const double s = 0.5 * (dist(rng) + 1.0);
    CHECK(FractionalParams::from_a(FractionalParams::from_s(s).a()).s() == doctest::Approx(s).epsilon(1e-15));
  }
}

TEST_CASE("graded mesh values") {
  auto y = make_graded_mesh(3, 1.0);
  CHECK(y == std::vector<double>{0.0, 0.5, 1.0});
  y = make_graded_mesh(3, 2.0);
  CHECK(y == std::vector<double>{0.0, 0.25, 1.0});
  y = make_graded_mesh(5, 1.5);
  for (std::size_t j = 1; j + 1 < y.size(); ++j) CHECK(y[j + 1] - y[j] > y[j] - y[j - 1]);
  CHECK_THROWS_AS(make_graded_mesh(2, 1.0), Error);
  CHECK_THROWS_AS(make_graded_mesh(5, 0.5), Error);
}

TEST_CASE("graded mesh nests under index doubling") {
  for (double g : {1.0, 1.5, 2.0, 4.0}) {
    const auto coarse = make_graded_mesh(17, g);
    const auto fine = make_graded_mesh(33, g);
    for (std::size_t j = 0; j < coarse.size(); ++j) CHECK(fine[2 * j] == coarse[j]);
  }
}

TEST_CASE("weight") {
  CHECK(weight(0.5, 0.0) == 1.0);
  CHECK(weight(0.25, -0.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(weight(0.0, 0.3) == 0.0);
  CHECK(weight(0.0, 0.0) == 1.0);
  try {
    weight(0.0, -0.5);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_weight);
  }
}

TEST_CASE("grid validation") {
  const auto p = FractionalParams::from_s(0.5);
  CHECK_THROWS_AS(SlabGrid({3, 1.0, 8, 8}, p), Error);
  CHECK_THROWS_AS(SlabGrid({1, 1.0, 7, 8}, p), Error);
  CHECK_THROWS_AS(SlabGrid({1, 0.0, 8, 8}, p), Error);
  CHECK_THROWS_AS(SlabGrid({1, 1.0, 8, 2}, p), Error);
  SlabGrid g({2, 4.0, 8, 5}, p);
  CHECK(g.trace_size() == 64);
  CHECK(g.slab_size() == 320);
  CHECK(g.coord(0) == doctest::Approx(-1.75));
  CHECK(g.y_nodes().front() == 0.0);
  CHECK(g.y_nodes().back() == 1.0);
}

TEST_CASE("fields reject wrong sizes and non-finite values") {
  auto g = make_grid({1, 1.0, 8, 4}, FractionalParams::from_s(0.5));
  CHECK_THROWS_AS(TraceField(g, std::vector<double>(7)), Error);
  std::vector<double> bad(8, 0.0);
  bad[3] = INFINITY;
  CHECK_THROWS_AS(TraceField(g, bad), Error);
  CHECK_THROWS_AS(SlabField(g, std::vector<double>(8)), Error);
}

namespace {
double roundtrip_error(Lateral lat, int n) {
  auto g = make_grid({n, 3.0, 16, 4, 0.0, lat}, FractionalParams::from_s(0.4));
  HorizontalTransform tr(*g);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  std::vector<double> u(g->trace_size()), back(g->trace_size());
  for (auto& x : u) x = nd(rng);
  std::vector<cplx> spec(tr.spectrum_size());
  tr.forward(u, spec);
  tr.inverse(spec, back);
  double err = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) err = std::max(err, std::abs(u[i] - back[i]));
  return err;
}
}  // namespace

TEST_CASE("transform round trip") {
  for (int n : {1, 2}) {
    CHECK(roundtrip_error(Lateral::periodic, n) < 1e-13);
    CHECK(roundtrip_error(Lateral::reflecting, n) < 1e-13);
  }
}

TEST_CASE("spectral derivative of a periodic mode") {
  const double L = 2.0 * M_PI;
  auto g = make_grid({2, L, 32, 4}, FractionalParams::from_s(0.5));
  HorizontalTransform tr(*g);
  std::vector<double> u(g->trace_size()), d(g->trace_size());
  for (std::size_t f = 0; f < u.size(); ++f) {
    const auto x = g->position(f);
    u[f] = std::sin(2 * x[0]) * std::cos(3 * x[1]);
  }
  tr.derivative(u, 1, d);
  double err = 0.0;
  for (std::size_t f = 0; f < u.size(); ++f) {
    const auto x = g->position(f);
    err = std::max(err, std::abs(d[f] + 3 * std::sin(2 * x[0]) * std::sin(3 * x[1])));
  }
  CHECK(err < 1e-12);
}

TEST_CASE("vertical stencil reproduces the constant-density mode") {
  // For a = 0 the profile is cosh(k(1-y))/cosh(k); second order in the mesh.
  const auto p = FractionalParams::from_a(0.0);
  const double k = 2.0;
  double prev = 0.0;
  for (int my : {65, 129, 257}) {
    VerticalStencil st(make_graded_mesh(my, 1.0), p);
    std::vector<double> phi(my);
    st.solve_mode(k * k, phi);
    double err = 0.0;
    for (int j = 0; j < my; ++j) {
      const double y = st.nodes()[j];
      err = std::max(err, std::abs(phi[j] - std::cosh(k * (1 - y)) / std::cosh(k)));
    }
    if (prev > 0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.05));
    prev = err;
  }
}

TEST_CASE("vertical stencil: rows vanish at the solution") {
  for (double a : {-0.8, 0.0, 0.6}) {
    const auto p = FractionalParams::from_a(a);
    VerticalStencil st(make_graded_mesh(40, p.default_grading()), p);
    std::vector<double> phi(40);
    st.solve_mode(9.0, phi);
    for (int j = 1; j < 40; ++j) CHECK(std::abs(st.scaled_residual(9.0, phi, j)) < 1e-13);
    CHECK(st.solve_mode(0.0, phi) == 0.0);
  }
}

TEST_CASE("derivative adjoint is the transpose") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> nd;
  for (auto lat : {Lateral::periodic, Lateral::reflecting}) {
    for (int n : {1, 2}) {
      auto g = make_grid({n, 3.0, 8, 4, 0.0, lat}, FractionalParams::from_s(0.5));
      HorizontalTransform tr(*g);
      std::vector<double> u(g->trace_size()), w(g->trace_size()), du(g->trace_size()), dtw(g->trace_size());
      for (int axis = 0; axis < n; ++axis) {
        for (auto& x : u) x = nd(rng);
        for (auto& x : w) x = nd(rng);
        tr.derivative(u, axis, du);
        tr.derivative_adjoint(w, axis, dtw);
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
          lhs += du[i] * w[i];
          rhs += u[i] * dtw[i];
        }
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
    }
  }
}
