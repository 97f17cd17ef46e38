#include "wwdtn/potential.hpp"

#include <algorithm>
#include <cmath>

#include "wwdtn/error.hpp"

namespace wwdtn {

Potential::Potential(Fn F, Fn f, Fn df, std::vector<double> minimizers)
    : F_(std::move(F)), f_(std::move(f)), df_(std::move(df)), minimizers_(std::move(minimizers)) {
  require(static_cast<bool>(F_) && static_cast<bool>(f_), "potential needs both F and f");
  require(!minimizers_.empty(), "potential needs at least one minimizer");
  shift_ = F_(minimizers_.front());
  for (double m : minimizers_) shift_ = std::min(shift_, F_(m));
  require(std::isfinite(shift_), "potential is not finite at its minimizers");
}

Potential Potential::double_well() {
  return Potential([](double t) { return 0.25 * (1 - t * t) * (1 - t * t); },
                   [](double t) { return t - t * t * t; },
                   [](double t) { return 1 - 3 * t * t; }, {-1.0, 1.0});
}

Potential Potential::custom(Fn F, Fn f, Fn df, std::vector<double> minimizers) {
  return Potential(std::move(F), std::move(f), std::move(df), std::move(minimizers));
}

double Potential::df(double t) const {
  if (df_) return df_(t);
  const double h = 1e-5 * std::max(1.0, std::abs(t));
  return (f_(t + h) - f_(t - h)) / (2 * h);
}

double Potential::max_curvature(double lo, double hi) const {
  require(lo <= hi, "empty interval");
  double worst = -df(lo);
  const int samples = 256;
  for (int k = 1; k <= samples; ++k) worst = std::max(worst, -df(lo + (hi - lo) * k / samples));
  return worst;
}

}  // namespace wwdtn
