#include "wwdtn/bessel.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>

#include "wwdtn/error.hpp"

namespace wwdtn {

namespace detail {

namespace {

// Taylor coefficients of 1/Gamma(z) = sum_k c[k] z^(k+1) (Abramowitz & Stegun 6.1.34).
constexpr double kInvGamma[] = {
    1.0000000000000000,  0.5772156649015329,  -0.6558780715202538, -0.0420026350340952, 0.1665386113822915,
    -0.0421977345555443, -0.0096219715278770, 0.0072189432466630,  -0.0011651675918591, -0.0002152416741149,
    0.0001280502823882,  -0.0000201348547807, -0.0000012504934821, 0.0000011330272320,  -0.0000002056338417,
    0.0000000061160950,  0.0000000050020075,  -0.0000000011812746, 0.0000000001043427,  0.0000000000077823,
    -0.0000000000036968, 0.0000000000005100,  -0.0000000000000206, -0.0000000000000054, 0.0000000000000014,
    0.0000000000000001,
};

}  // namespace

TemmeGammas temme_gammas(double mu) {
  // 1/Gamma(1+mu) = sum_k c[k] mu^k. Split into even/odd powers of mu.
  const double m2 = mu * mu;
  double even = 0.0;
  double odd = 0.0;
  constexpr int n = static_cast<int>(sizeof(kInvGamma) / sizeof(kInvGamma[0]));
  for (int k = n - 1; k >= 0; --k) {
    if (k % 2 == 0)
      even = even * m2 + kInvGamma[k];
    else
      odd = odd * m2 + kInvGamma[k];
  }
  TemmeGammas g{};
  g.gampl = even + mu * odd;
  g.gammi = even - mu * odd;
  g.gam1 = -odd;
  g.gam2 = even;
  return g;
}

}  // namespace detail

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 100000;

// Temme's method: K_mu, K_{mu+1} from a series (x < 2) or Steed's continued
// fraction (x >= 2), I_nu from the ratio continued fraction and the Wronskian,
// then upward recurrence in the order. Results are exponentially scaled.
BesselIK temme_scaled(double nu, double x) {
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;

  // CF1 (modified Lentz) for I'_nu / I_nu.
  double h = nu * xi;
  if (h < kTiny) h = kTiny;
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int it = 0;
  for (; it < kMaxIter; ++it) {
    b += xi2;
    d = 1.0 / (b + d);
    c = b + 1.0 / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (it >= kMaxIter) fail(ErrorKind::not_converged, "Bessel ratio continued fraction did not converge");

  double ril = kTiny;
  double ripl = h * ril;
  const double ril1 = ril;
  const double rip1 = ripl;
  double fact = nu * xi;
  for (int l = nl - 1; l >= 0; --l) {
    const double ritemp = fact * ril + ripl;
    fact -= xi;
    ripl = fact * ritemp + ril;
    ril = ritemp;
  }
  const double f = ripl / ril;

  double rkmu = 0.0;
  double rk1 = 0.0;
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = std::numbers::pi * mu;
    const double fct = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double dd = -std::log(x2);
    double e = mu * dd;
    const double fct2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const auto g = detail::temme_gammas(mu);
    double ff = fct * (g.gam1 * std::cosh(e) + g.gam2 * fct2 * dd);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double cc = 1.0;
    dd = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
      cc *= dd / i;
      p /= i - mu;
      q /= i + mu;
      const double del = cc * ff;
      sum += del;
      sum1 += cc * (p - i * ff);
      if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) fail(ErrorKind::not_converged, "Temme series for K did not converge");
    // Scale K by e^x here; the Wronskian step then yields I scaled by e^-x.
    const double ex = std::exp(x);
    rkmu = sum * ex;
    rk1 = sum1 * xi2 * ex;
  } else {
    double bb = 2.0 * (1.0 + x);
    double dd = 1.0 / bb;
    double hh = dd;
    double delh = dd;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double cc = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 1;
    for (; i < kMaxIter; ++i) {
      a -= 2 * i;
      cc = -a * cc / (i + 1.0);
      const double qnew = (q1 - bb * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += cc * qnew;
      bb += 2.0;
      dd = 1.0 / (bb + a * dd);
      delh = (bb * dd - 1.0) * delh;
      hh += delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < kEps) break;
    }
    if (i >= kMaxIter) fail(ErrorKind::not_converged, "Steed continued fraction for K did not converge");
    hh = a1 * hh;
    rkmu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    rk1 = rkmu * (mu + x + 0.5 - hh) * xi;
  }

  const double rkmup = mu * xi * rkmu - rk1;
  const double rimu = xi / (f * rkmu - rkmup);
  BesselIK out{};
  out.i = rimu * ril1 / ril;
  out.di = rimu * rip1 / ril;
  for (int i = 1; i <= nl; ++i) {
    const double rktemp = (mu + i) * xi2 * rk1 + rkmu;
    rkmu = rk1;
    rk1 = rktemp;
  }
  out.k = rkmu;
  out.dk = nu * xi * rkmu - rk1;
  return out;
}

}  // namespace

BesselIK bessel_ik_scaled(double nu, double x) {
  require(std::isfinite(nu) && nu > 0.0 && nu < 2.0, "Bessel order must lie in (0, 2)");
  require(std::isfinite(x) && x > 0.0, "Bessel argument must be positive");
  const BesselIK r = temme_scaled(nu, x);
  // Wronskian I K' - I' K = -1/x holds for the scaled pair as well.
  assert(std::abs((r.i * r.dk - r.di * r.k) * x + 1.0) < 1e-10);
  return r;
}

BesselIK bessel_mod(double nu, double x) {
  if (x > 700.0) fail(ErrorKind::overflow, "I_nu(x) overflows for x > 700; use the scaled pair");
  BesselIK r = bessel_ik_scaled(nu, x);
  const double ex = std::exp(x);
  r.i *= ex;
  r.di *= ex;
  r.k /= ex;
  r.dk /= ex;
  return r;
}

}  // namespace wwdtn
