#include "wwdtn/grid.hpp"

#include <cmath>
#include <string>

#include "wwdtn/error.hpp"

namespace wwdtn {

std::vector<double> make_graded_mesh(int my, double gamma) {
  require(my >= 3, "vertical mesh needs at least 3 nodes, got " + std::to_string(my));
  require(std::isfinite(gamma) && gamma >= 1.0, "grading exponent must be >= 1, got " + std::to_string(gamma));
  std::vector<double> y(static_cast<std::size_t>(my));
  const double last = my - 1;
  for (int j = 0; j < my; ++j) y[j] = std::pow(j / last, gamma);
  y.front() = 0.0;
  y.back() = 1.0;
  for (int j = 1; j < my; ++j)
    if (!(y[j] > y[j - 1])) fail(ErrorKind::invalid_argument, "graded mesh underflows; lower gamma or my");
  return y;
}

double weight(double y, double a) {
  require(y >= 0.0 && y <= 1.0, "height must lie in [0, 1]");
  require(a > -1.0 && a < 1.0, "weight exponent a must lie in (-1, 1)");
  if (y > 0.0) return std::pow(y, a);
  if (a > 0.0) return 0.0;
  if (a == 0.0) return 1.0;
  fail(ErrorKind::degenerate_weight, "weight y^a diverges at y = 0 for a < 0; use half-node fluxes");
}

SlabGrid::SlabGrid(const GridSpec& spec, const FractionalParams& params)
    : n_(spec.n), box_(spec.box), nx_(spec.nx), my_(spec.my), lateral_(spec.lateral) {
  require(n_ == 1 || n_ == 2, "horizontal dimension must be 1 or 2");
  require(std::isfinite(box_) && box_ > 0.0, "box period must be positive");
  require(nx_ >= 4 && nx_ % 2 == 0, "horizontal node count must be even and >= 4");
  gamma_ = spec.gamma > 0.0 ? spec.gamma : params.default_grading();
  y_ = make_graded_mesh(my_, gamma_);
  trace_size_ = n_ == 1 ? static_cast<std::size_t>(nx_) : static_cast<std::size_t>(nx_) * nx_;
}

double SlabGrid::cell_measure() const noexcept {
  const double h = spacing();
  return n_ == 1 ? h : h * h;
}

std::array<double, 2> SlabGrid::position(std::size_t flat) const noexcept {
  if (n_ == 1) return {coord(static_cast<int>(flat)), 0.0};
  return {coord(static_cast<int>(flat / nx_)), coord(static_cast<int>(flat % nx_))};
}

GridSpec SlabGrid::spec() const {
  return GridSpec{n_, box_, nx_, my_, gamma_, lateral_};
}

std::shared_ptr<const SlabGrid> SlabGrid::with_lateral(Lateral lateral) const {
  auto copy = std::shared_ptr<SlabGrid>(new SlabGrid(*this));
  copy->lateral_ = lateral;
  return copy;
}

GridPtr make_grid(const GridSpec& spec, const FractionalParams& params) {
  return std::make_shared<const SlabGrid>(spec, params);
}

}  // namespace wwdtn
