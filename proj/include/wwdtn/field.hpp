#pragma once

#include <span>
#include <vector>

#include "wwdtn/grid.hpp"

namespace wwdtn {

/// Samples of the surface datum u on the horizontal nodes (y = 0).
class TraceField {
 public:
  TraceField(GridPtr grid, std::vector<double> values);
  explicit TraceField(GridPtr grid, double fill = 0.0);

  const SlabGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double& operator[](std::size_t i) noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

/// Samples of the extension v on the full slab. Storage is level-major:
/// index = j * trace_size + i for vertical node j and horizontal node i.
class SlabField {
 public:
  SlabField(GridPtr grid, std::vector<double> values);

  const SlabGrid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> level(int j) const noexcept;
  std::span<double> level(int j) noexcept;
  double at(int j, std::size_t i) const noexcept { return values_[j * grid_->trace_size() + i]; }

  TraceField trace() const;

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

/// Discrete L2 inner product on the trace grid (cell measure times sum).
double inner(const TraceField& u, const TraceField& w);

}  // namespace wwdtn
