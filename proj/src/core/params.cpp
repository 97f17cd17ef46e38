#include "wwdtn/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wwdtn/error.hpp"

namespace wwdtn {

FractionalParams FractionalParams::from_a(double a) {
  require(std::isfinite(a) && a > -1.0 && a < 1.0, "weight exponent a must lie in (-1, 1), got " + std::to_string(a));
  return FractionalParams(a, 0.5 * (1.0 - a));
}

FractionalParams FractionalParams::from_s(double s) {
  require(std::isfinite(s) && s > 0.0 && s < 1.0, "fractional order s must lie in (0, 1), got " + std::to_string(s));
  return FractionalParams(1.0 - 2.0 * s, s);
}

// The per-mode solution behaves like 1 - c y^(2s) near the surface; grading
// with exponent 1/s makes that term smooth in the mesh coordinate, and the
// floor of 2 resolves the e^(-|xi| y) boundary layer of high modes.
double FractionalParams::default_grading() const noexcept { return std::max(2.0, 1.0 / s_); }

}  // namespace wwdtn
