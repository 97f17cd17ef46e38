#pragma once

namespace wwdtn {

/// Weight exponent `a` of the density y^a together with the fractional
/// order s = (1 - a) / 2. Construct through from_a / from_s so the pair is
/// always consistent.
class FractionalParams {
 public:
  static FractionalParams from_a(double a);
  static FractionalParams from_s(double s);

  double a() const noexcept { return a_; }
  double s() const noexcept { return s_; }

  /// Vertical grading exponent used when a grid does not specify one.
  double default_grading() const noexcept;

 private:
  FractionalParams(double a, double s) : a_(a), s_(s) {}
  double a_;
  double s_;
};

}  // namespace wwdtn
