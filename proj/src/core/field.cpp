#include "wwdtn/field.hpp"

#include <cmath>

#include "wwdtn/error.hpp"

namespace wwdtn {

namespace {

void check_finite(std::span<const double> v) {
  for (double x : v) require(std::isfinite(x), "field values must be finite");
}

}  // namespace

TraceField::TraceField(GridPtr grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
  require(grid_ != nullptr, "trace needs a grid");
  require(values_.size() == grid_->trace_size(), "trace length does not match the horizontal grid");
  check_finite(values_);
}

TraceField::TraceField(GridPtr grid, double fill) : grid_(std::move(grid)) {
  require(grid_ != nullptr, "trace needs a grid");
  values_.assign(grid_->trace_size(), fill);
}

SlabField::SlabField(GridPtr grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
  require(grid_ != nullptr, "slab field needs a grid");
  require(values_.size() == grid_->slab_size(), "slab field length does not match the grid");
  check_finite(values_);
}

std::span<const double> SlabField::level(int j) const noexcept {
  const auto m = grid_->trace_size();
  return std::span<const double>(values_).subspan(j * m, m);
}

std::span<double> SlabField::level(int j) noexcept {
  const auto m = grid_->trace_size();
  return std::span<double>(values_).subspan(j * m, m);
}

TraceField SlabField::trace() const {
  auto lv = level(0);
  return TraceField(grid_, std::vector<double>(lv.begin(), lv.end()));
}

double inner(const TraceField& u, const TraceField& w) {
  require(u.size() == w.size(), "inner product of traces on different grids");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * w[i];
  return acc * u.grid().cell_measure();
}

}  // namespace wwdtn
