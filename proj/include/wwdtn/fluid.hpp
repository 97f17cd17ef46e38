#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wwdtn {

using Point = std::vector<double>;
using ScalarField = std::function<double(std::span<const double> X, double t)>;
using VectorField = std::function<void(std::span<const double> X, double t, std::span<double> out)>;

/// Density and velocity on R^dim. Derivative callbacks are optional; any
/// that are missing are replaced by central differences with step h.
struct FlowSample {
  int dim = 0;
  ScalarField rho;
  VectorField v;
  ScalarField drho_dt;
  VectorField grad_rho;
  ScalarField div_v;
  double h = 1e-5;
};

/// Throws unless dim >= 1, rho and v are set and 0 < h <= 1e-3.
void validate(const FlowSample& flow);

/// sup |d_t rho + div(rho v)| over the points.
double continuity_residual(const FlowSample& flow, std::span<const Point> points, double t);
/// sup |d_t rho + grad rho . v|.
double incompressibility_residual(const FlowSample& flow, std::span<const Point> points, double t);
/// sup |div v|.
double divergence_free_check(const FlowSample& flow, std::span<const Point> points, double t);

/// Bottom y = b(x, t) with x in R^(dim-1); the residual is
/// sup |rho v . (grad_x b, -1)| on the graph at the sample abscissae.
using BottomProfile = std::function<double(std::span<const double> x, double t)>;
double bottom_flux_residual(const FlowSample& flow, const BottomProfile& b, std::span<const Point> xs, double t);

/// Gauss-Legendre nodes and weights on [0, 1].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_legendre_unit(int count);

/// Velocity frozen at a fixed time.
using StaticField = std::function<void(std::span<const double> X, std::span<double> out)>;

/// u(X) = int_0^1 v(theta X) . X dtheta with `nodes` Gauss-Legendre points (>= 8).
double potential_from_field(const StaticField& v, std::span<const double> X, int nodes = 16);

/// Central-difference gradient of potential_from_field at X.
std::vector<double> potential_gradient(const StaticField& v, std::span<const double> X, int nodes = 16, double h = 1e-5);

/// Circulation of v around the triangle 0 -> X -> X + delta e_j -> 0.
double triangle_circulation(const StaticField& v, std::span<const double> X, int j, double delta, int nodes = 16);

/// Named flows: "packing" (rho = e^(dim t), v = -X), "leak" (rho = 1, v = -X),
/// "shear" (dim 2, v = (x2, 0)), "rotation" (dim 2, v = (-x2, x1)), "static" (v = 0).
FlowSample example_flow(const std::string& name, int dim);
std::vector<std::string> example_flow_names();

}  // namespace wwdtn
