#pragma once

#include <span>
#include <vector>

#include "wwdtn/params.hpp"

namespace wwdtn {

/// Conservative discretisation of (y^a phi')' = k^2 y^a phi on a vertical mesh.
///
/// Fluxes between nodes j and j+1 use the exact harmonic weight
/// kappa = 1 / int_{y_j}^{y_{j+1}} y^-a dy, and the reaction term uses the
/// exact weighted measure of the control volume around each node (edges at
/// the half-nodes, closed by 0 and 1). Neither involves y^a at y = 0.
class VerticalStencil {
 public:
  VerticalStencil(std::vector<double> y, const FractionalParams& params);

  const std::vector<double>& nodes() const noexcept { return y_; }
  const std::vector<double>& kappa() const noexcept { return kappa_; }
  const std::vector<double>& mass() const noexcept { return mass_; }
  int size() const noexcept { return static_cast<int>(y_.size()); }

  /// Solves for the mode profile with phi_0 = 1 and zero flux at y = 1.
  /// Writes phi into `profile` (length size()) and returns the discrete
  /// surface flux -y^a phi'(0), evaluated as the total reaction k^2 sum m_j phi_j.
  double solve_mode(double k2, std::span<double> profile) const;

  /// Surface flux only.
  double symbol(double k2) const;

  /// Residual of row j (j >= 1) of the discrete equation, scaled by the row
  /// diagonal, for a profile with arbitrary boundary value.
  double scaled_residual(double k2, std::span<const double> profile, int j) const;

 private:
  std::vector<double> y_;
  std::vector<double> kappa_;
  std::vector<double> mass_;
};

}  // namespace wwdtn
