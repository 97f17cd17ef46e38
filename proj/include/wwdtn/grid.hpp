#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "wwdtn/params.hpp"

namespace wwdtn {

/// Nodes y_j = (j / (my - 1))^gamma, j = 0..my-1. Throws for my < 3 or gamma < 1.
std::vector<double> make_graded_mesh(int my, double gamma);

/// The density y^a. At y = 0 this is 0 for a > 0 and 1 for a = 0; for a < 0
/// it diverges and the call throws ErrorKind::degenerate_weight.
double weight(double y, double a);

/// How the horizontal box closes up. Periodic boxes are the native setting of
/// the spectral operators; reflecting boxes are evaluated as the even
/// extension into a box of twice the period (zero lateral flux).
enum class Lateral { periodic, reflecting };

struct GridSpec {
  int n = 1;          // horizontal dimension, 1 or 2
  double box = 0.0;   // period / side length L
  int nx = 0;         // nodes per horizontal axis (even, >= 4)
  int my = 0;         // vertical nodes (>= 3)
  double gamma = 0.0; // vertical grading; <= 0 selects the default for the weight
  Lateral lateral = Lateral::periodic;
};

/// Horizontal box [-L/2, L/2)^n with cell-centred nodes, times a graded
/// vertical mesh on [0, 1]. Immutable; share through GridPtr.
class SlabGrid {
 public:
  SlabGrid(const GridSpec& spec, const FractionalParams& params);

  int n() const noexcept { return n_; }
  double box() const noexcept { return box_; }
  int nx() const noexcept { return nx_; }
  int my() const noexcept { return my_; }
  double gamma() const noexcept { return gamma_; }
  Lateral lateral() const noexcept { return lateral_; }
  const std::vector<double>& y_nodes() const noexcept { return y_; }

  double spacing() const noexcept { return box_ / nx_; }
  double cell_measure() const noexcept;
  std::size_t trace_size() const noexcept { return trace_size_; }
  std::size_t slab_size() const noexcept { return trace_size_ * static_cast<std::size_t>(my_); }

  /// Coordinate of node i along any horizontal axis.
  double coord(int i) const noexcept { return -0.5 * box_ + (i + 0.5) * spacing(); }
  /// Horizontal position of a flat trace index (row-major, last axis fastest).
  std::array<double, 2> position(std::size_t flat) const noexcept;

  GridSpec spec() const;

  /// Same horizontal layout with a different lateral closure.
  std::shared_ptr<const SlabGrid> with_lateral(Lateral lateral) const;

 private:
  SlabGrid() = default;
  int n_ = 1;
  double box_ = 0.0;
  int nx_ = 0;
  int my_ = 0;
  double gamma_ = 1.0;
  Lateral lateral_ = Lateral::periodic;
  std::size_t trace_size_ = 0;
  std::vector<double> y_;
};

using GridPtr = std::shared_ptr<const SlabGrid>;

GridPtr make_grid(const GridSpec& spec, const FractionalParams& params);

}  // namespace wwdtn
