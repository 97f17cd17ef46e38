#include "wwdtn/fluid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wwdtn/error.hpp"

namespace wwdtn {

void validate(const FlowSample& flow) {
  require(flow.dim >= 1, "flow dimension must be positive");
  require(static_cast<bool>(flow.rho) && static_cast<bool>(flow.v), "flow needs a density and a velocity");
  require(flow.h > 0.0 && flow.h <= 1e-3, "difference step must lie in (0, 1e-3]");
}

namespace {

void check_point(const FlowSample& flow, std::span<const double> X, double t) {
  require(X.size() == static_cast<std::size_t>(flow.dim), "sample point has the wrong dimension");
  const double r = flow.rho(X, t);
  require(std::isfinite(r) && r > 0.0, "density must be positive at every sample");
}

double drho_dt(const FlowSample& flow, std::span<const double> X, double t) {
  if (flow.drho_dt) return flow.drho_dt(X, t);
  return (flow.rho(X, t + flow.h) - flow.rho(X, t - flow.h)) / (2 * flow.h);
}

std::vector<double> grad_rho(const FlowSample& flow, std::span<const double> X, double t) {
  std::vector<double> g(flow.dim);
  if (flow.grad_rho) {
    flow.grad_rho(X, t, g);
    return g;
  }
  std::vector<double> p(X.begin(), X.end());
  for (int i = 0; i < flow.dim; ++i) {
    const double x0 = p[i];
    p[i] = x0 + flow.h;
    const double up = flow.rho(p, t);
    p[i] = x0 - flow.h;
    const double dn = flow.rho(p, t);
    p[i] = x0;
    g[i] = (up - dn) / (2 * flow.h);
  }
  return g;
}

std::vector<double> velocity(const FlowSample& flow, std::span<const double> X, double t) {
  std::vector<double> out(flow.dim);
  flow.v(X, t, out);
  return out;
}

// div(c v) with c the density (weighted) or 1.
double divergence(const FlowSample& flow, std::span<const double> X, double t, bool weighted) {
  if (!weighted && flow.div_v) return flow.div_v(X, t);
  std::vector<double> p(X.begin(), X.end()), w(flow.dim);
  double acc = 0.0;
  for (int i = 0; i < flow.dim; ++i) {
    const double x0 = p[i];
    p[i] = x0 + flow.h;
    flow.v(p, t, w);
    const double up = w[i] * (weighted ? flow.rho(p, t) : 1.0);
    p[i] = x0 - flow.h;
    flow.v(p, t, w);
    const double dn = w[i] * (weighted ? flow.rho(p, t) : 1.0);
    p[i] = x0;
    acc += (up - dn) / (2 * flow.h);
  }
  return acc;
}

template <class F>
double sup_over(const FlowSample& flow, std::span<const Point> points, double t, F&& term) {
  validate(flow);
  double worst = 0.0;
  for (const auto& X : points) {
    check_point(flow, X, t);
    worst = std::max(worst, std::abs(term(std::span<const double>(X))));
  }
  return worst;
}

}  // namespace

double continuity_residual(const FlowSample& flow, std::span<const Point> points, double t) {
  return sup_over(flow, points, t, [&](std::span<const double> X) {
    if (flow.div_v && flow.grad_rho) {
      // div(rho v) = grad rho . v + rho div v when both pieces are analytic.
      const auto g = grad_rho(flow, X, t);
      const auto v = velocity(flow, X, t);
      double dot = 0.0;
      for (int i = 0; i < flow.dim; ++i) dot += g[i] * v[i];
      return drho_dt(flow, X, t) + dot + flow.rho(X, t) * flow.div_v(X, t);
    }
    return drho_dt(flow, X, t) + divergence(flow, X, t, true);
  });
}

double incompressibility_residual(const FlowSample& flow, std::span<const Point> points, double t) {
  return sup_over(flow, points, t, [&](std::span<const double> X) {
    const auto g = grad_rho(flow, X, t);
    const auto v = velocity(flow, X, t);
    double dot = 0.0;
    for (int i = 0; i < flow.dim; ++i) dot += g[i] * v[i];
    return drho_dt(flow, X, t) + dot;
  });
}

double divergence_free_check(const FlowSample& flow, std::span<const Point> points, double t) {
  return sup_over(flow, points, t, [&](std::span<const double> X) { return divergence(flow, X, t, false); });
}

double bottom_flux_residual(const FlowSample& flow, const BottomProfile& b, std::span<const Point> xs, double t) {
  validate(flow);
  require(flow.dim >= 2, "a bottom needs at least one horizontal direction");
  require(static_cast<bool>(b), "bottom profile is missing");
  const int m = flow.dim - 1;
  double worst = 0.0;
  for (const auto& x : xs) {
    require(x.size() == static_cast<std::size_t>(m), "bottom abscissa has the wrong dimension");
    std::vector<double> X(x.begin(), x.end());
    X.push_back(b(x, t));
    check_point(flow, X, t);
    const auto v = velocity(flow, X, t);
    std::vector<double> p(x.begin(), x.end());
    double dot = -v[m];
    for (int i = 0; i < m; ++i) {
      const double x0 = p[i];
      p[i] = x0 + flow.h;
      const double up = b(p, t);
      p[i] = x0 - flow.h;
      const double dn = b(p, t);
      p[i] = x0;
      dot += v[i] * (up - dn) / (2 * flow.h);
    }
    worst = std::max(worst, std::abs(flow.rho(X, t) * dot));
  }
  return worst;
}

Quadrature gauss_legendre_unit(int count) {
  require(count >= 1 && count <= 200, "quadrature size out of range");
  Quadrature q{std::vector<double>(count), std::vector<double>(count)};
  const unsigned n = static_cast<unsigned>(count);
  for (int k = 0; k < count; ++k) {
    // Newton from the Chebyshev-like guess; roots ordered from +1 downwards.
    double x = std::cos(std::numbers::pi * (k + 0.75) / (count + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      const double p = std::legendre(n, x);
      const double pm = std::legendre(n - 1, x);
      dp = n * (x * p - pm) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      const double p = std::legendre(n, x);
      const double pm = std::legendre(n - 1, x);
      dp = n * (x * p - pm) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[count - 1 - k] = 0.5 * (x + 1.0);
    q.weights[count - 1 - k] = 0.5 * w;
  }
  return q;
}

namespace {

// int_0^1 v(P + theta D) . D dtheta
double segment_integral(const StaticField& v, std::span<const double> P, std::span<const double> D, const Quadrature& q) {
  const std::size_t d = P.size();
  std::vector<double> X(d), w(d);
  double acc = 0.0;
  for (std::size_t k = 0; k < q.nodes.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) X[i] = P[i] + q.nodes[k] * D[i];
    v(X, w);
    double dot = 0.0;
    for (std::size_t i = 0; i < d; ++i) dot += w[i] * D[i];
    acc += q.weights[k] * dot;
  }
  return acc;
}

}  // namespace

double potential_from_field(const StaticField& v, std::span<const double> X, int nodes) {
  require(nodes >= 8, "potential quadrature needs at least 8 nodes");
  require(static_cast<bool>(v) && !X.empty(), "potential needs a field and a point");
  const std::vector<double> origin(X.size(), 0.0);
  return segment_integral(v, origin, X, gauss_legendre_unit(nodes));
}

std::vector<double> potential_gradient(const StaticField& v, std::span<const double> X, int nodes, double h) {
  require(h > 0.0, "difference step must be positive");
  std::vector<double> p(X.begin(), X.end()), g(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double x0 = p[i];
    p[i] = x0 + h;
    const double up = potential_from_field(v, p, nodes);
    p[i] = x0 - h;
    const double dn = potential_from_field(v, p, nodes);
    p[i] = x0;
    g[i] = (up - dn) / (2 * h);
  }
  return g;
}

double triangle_circulation(const StaticField& v, std::span<const double> X, int j, double delta, int nodes) {
  require(j >= 0 && static_cast<std::size_t>(j) < X.size(), "edge direction out of range");
  require(nodes >= 8, "circulation quadrature needs at least 8 nodes");
  const auto q = gauss_legendre_unit(nodes);
  const std::size_t d = X.size();
  std::vector<double> origin(d, 0.0), Y(X.begin(), X.end()), step(d, 0.0), back(d);
  Y[j] += delta;
  step[j] = delta;
  for (std::size_t i = 0; i < d; ++i) back[i] = -Y[i];
  return segment_integral(v, origin, X, q) + segment_integral(v, X, step, q) + segment_integral(v, Y, back, q);
}

std::vector<std::string> example_flow_names() { return {"packing", "leak", "shear", "rotation", "static"}; }

FlowSample example_flow(const std::string& name, int dim) {
  require(dim >= 1, "flow dimension must be positive");
  FlowSample f;
  f.dim = dim;
  auto inward = [](std::span<const double> X, double, std::span<double> out) {
    for (std::size_t i = 0; i < X.size(); ++i) out[i] = -X[i];
  };
  const double d = dim;
  if (name == "packing") {
    f.rho = [d](std::span<const double>, double t) { return std::exp(d * t); };
    f.v = inward;
  } else if (name == "leak") {
    f.rho = [](std::span<const double>, double) { return 1.0; };
    f.v = inward;
  } else if (name == "shear" || name == "rotation") {
    require(dim == 2, name + " is a planar flow");
    f.rho = [](std::span<const double>, double) { return 1.0; };
    if (name == "shear") {
      f.v = [](std::span<const double> X, double, std::span<double> out) {
        out[0] = X[1];
        out[1] = 0.0;
      };
    } else {
      f.v = [](std::span<const double> X, double, std::span<double> out) {
        out[0] = -X[1];
        out[1] = X[0];
      };
    }
  } else if (name == "static") {
    f.rho = [](std::span<const double>, double) { return 1.0; };
    f.v = [](std::span<const double>, double, std::span<double> out) { std::fill(out.begin(), out.end(), 0.0); };
  } else {
    fail(ErrorKind::invalid_argument, "unknown example flow '" + name + "'");
  }
  return f;
}

}  // namespace wwdtn
