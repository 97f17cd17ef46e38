#include "wwdtn/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wwdtn/error.hpp"

namespace wwdtn {

const char* to_string(Monotonicity m) noexcept {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::constant: return "constant";
    case Monotonicity::non_monotone: return "non-monotone";
  }
  return "unknown";
}

Monotonicity monotonicity_check(std::span<const double> p) {
  require(p.size() >= 3, "profile needs at least 3 samples");
  const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  const double tau = 1e-8 * (*hi - *lo + 1e-300);
  bool flat = true;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double d = p[i] - p[i - 1];
    if (d < -tau) return Monotonicity::non_monotone;
    if (std::abs(d) > tau) flat = false;
  }
  return flat ? Monotonicity::constant : Monotonicity::increasing;
}

namespace {

// Derivative along one axis of a row-major nx x nx array: fourth-order
// central differences inside, second order next to the edges, no wrap.
double axis_diff(std::span<const double> u, int nx, int i1, int i2, int axis, double h) {
  auto at = [&](int k) {
    return axis == 0 ? u[static_cast<std::size_t>(k) * nx + i2] : u[static_cast<std::size_t>(i1) * nx + k];
  };
  const int i = axis == 0 ? i1 : i2;
  if (i == 0) return (-3 * at(0) + 4 * at(1) - at(2)) / (2 * h);
  if (i == nx - 1) return (3 * at(nx - 1) - 4 * at(nx - 2) + at(nx - 3)) / (2 * h);
  if (i == 1 || i == nx - 2) return (at(i + 1) - at(i - 1)) / (2 * h);
  return (-at(i + 2) + 8 * at(i + 1) - 8 * at(i - 1) + at(i - 2)) / (12 * h);
}

}  // namespace

std::array<double, 2> fit_direction(const TraceField& u) {
  const SlabGrid& g = u.grid();
  require(g.n() == 2, "direction fitting needs a 2D trace");
  const int nx = g.nx();
  const double h = g.spacing();
  double jxx = 0, jxy = 0, jyy = 0, mx = 0, my = 0;
  for (int i1 = 0; i1 < nx; ++i1)
    for (int i2 = 0; i2 < nx; ++i2) {
      const double gx = axis_diff(u.values(), nx, i1, i2, 0, h);
      const double gy = axis_diff(u.values(), nx, i1, i2, 1, h);
      jxx += gx * gx;
      jxy += gx * gy;
      jyy += gy * gy;
      mx += gx;
      my += gy;
    }
  const double trace = jxx + jyy;
  if (!(trace > 0.0)) fail(ErrorKind::invalid_argument, "constant field has no direction");
  const double gap = std::hypot(jxx - jyy, 2 * jxy);
  if (gap <= 1e-12 * trace) return {1.0, 0.0};
  const double theta = 0.5 * std::atan2(2 * jxy, jxx - jyy);
  std::array<double, 2> w{std::cos(theta), std::sin(theta)};
  if (w[0] * mx + w[1] * my < 0) w = {-w[0], -w[1]};
  return w;
}

namespace {

struct Binning {
  Profile1D profile;
  std::vector<double> proj;
};

Binning bin(const TraceField& u, std::array<double, 2> omega) {
  const SlabGrid& g = u.grid();
  require(std::abs(std::hypot(omega[0], omega[1]) - 1.0) < 1e-12, "direction must be a unit vector");
  const std::size_t m = u.size();
  const double h = g.spacing();
  Binning b;
  b.proj.resize(m);
  for (std::size_t f = 0; f < m; ++f) {
    const auto x = g.position(f);
    b.proj[f] = omega[0] * x[0] + (g.n() == 2 ? omega[1] * x[1] : 0.0);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return b.proj[a] < b.proj[c]; });

  // Group coincident projections; if the distinct levels are well separated
  // each level is its own bin, otherwise fall back to bins of one spacing.
  const double same = 1e-9 * h;
  std::vector<std::size_t> starts{0};
  for (std::size_t k = 1; k < m; ++k)
    if (b.proj[order[k]] - b.proj[order[k - 1]] > same) starts.push_back(k);
  double min_gap = INFINITY;
  for (std::size_t s = 1; s < starts.size(); ++s)
    min_gap = std::min(min_gap, b.proj[order[starts[s]]] - b.proj[order[starts[s] - 1]]);

  auto flush = [&](std::size_t from, std::size_t to) {
    double st = 0, sv = 0;
    for (std::size_t k = from; k < to; ++k) {
      st += b.proj[order[k]];
      sv += u[order[k]];
    }
    const double cnt = static_cast<double>(to - from);
    b.profile.t.push_back(st / cnt);
    b.profile.value.push_back(sv / cnt);
  };

  if (min_gap >= 0.25 * h) {
    starts.push_back(m);
    for (std::size_t s = 0; s + 1 < starts.size(); ++s) flush(starts[s], starts[s + 1]);
  } else {
    const double base = b.proj[order.front()];
    std::size_t from = 0;
    long current = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const long idx = static_cast<long>(std::floor((b.proj[order[k]] - base) / h));
      if (idx != current) {
        if (k > from) flush(from, k);
        from = k;
        current = idx;
      }
    }
    flush(from, m);
  }
  return b;
}

double lookup(const Profile1D& p, double t) {
  const auto& ts = p.t;
  if (t <= ts.front()) return p.value.front();
  if (t >= ts.back()) return p.value.back();
  const std::size_t k = static_cast<std::size_t>(std::upper_bound(ts.begin(), ts.end(), t) - ts.begin());
  const double w = (t - ts[k - 1]) / (ts[k] - ts[k - 1]);
  return (1 - w) * p.value[k - 1] + w * p.value[k];
}

}  // namespace

Profile1D one_d_profile(const TraceField& u, std::array<double, 2> omega) { return bin(u, omega).profile; }

double one_d_residual(const TraceField& u, std::array<double, 2> omega) {
  const auto b = bin(u, omega);
  double mean = 0.0;
  for (double x : u.values()) mean += x;
  mean /= static_cast<double>(u.size());
  double num = 0.0, den = 0.0;
  for (std::size_t f = 0; f < u.size(); ++f) {
    const double d = u[f] - lookup(b.profile, b.proj[f]);
    num += d * d;
    den += (u[f] - mean) * (u[f] - mean);
  }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

SymmetryReport symmetry_report(const TraceField& u) {
  SymmetryReport r;
  if (u.grid().n() == 2) r.omega = fit_direction(u);
  const auto b = bin(u, r.omega);
  r.profile = b.profile;
  r.residual = one_d_residual(u, r.omega);
  r.monotone = monotonicity_check(r.profile.value);
  return r;
}

}  // namespace wwdtn
