#pragma once

#include <functional>
#include <vector>

namespace wwdtn {

/// Energy density F with reaction term f = -F' and its derivative f'.
/// F is shifted at construction so that its minimum over the listed
/// minimizers is zero.
class Potential {
 public:
  using Fn = std::function<double(double)>;

  /// F(t) = (1 - t^2)^2 / 4, f(t) = t - t^3.
  static Potential double_well();

  /// User-supplied pair. `df` may be empty, in which case f' is taken by
  /// central differences. Throws if the minimizer list is empty.
  static Potential custom(Fn F, Fn f, Fn df, std::vector<double> minimizers);

  double F(double t) const { return F_(t) - shift_; }
  double f(double t) const { return f_(t); }
  double df(double t) const;
  /// Value of the unshifted density at its lowest listed minimizer.
  double min_value() const noexcept { return shift_; }
  const std::vector<double>& minimizers() const noexcept { return minimizers_; }

  /// Largest curvature F'' = -f' sampled on [lo, hi].
  double max_curvature(double lo, double hi) const;

 private:
  Potential(Fn F, Fn f, Fn df, std::vector<double> minimizers);
  Fn F_, f_, df_;
  std::vector<double> minimizers_;
  double shift_ = 0.0;
};

}  // namespace wwdtn
