#pragma once

namespace wwdtn {

/// Modified Bessel functions I_nu, K_nu and their derivatives.
struct BesselIK {
  double i;
  double k;
  double di;
  double dk;
};

/// Exponentially scaled pair: i, di carry a factor e^(-x); k, dk carry e^(x).
/// Safe for any x > 0.
BesselIK bessel_ik_scaled(double nu, double x);

/// Unscaled values for 0 < nu < 2 and 0 < x <= 700; larger x overflows and
/// throws ErrorKind::overflow (use bessel_ik_scaled instead).
BesselIK bessel_mod(double nu, double x);

namespace detail {
/// 1/Gamma(1 + mu) and 1/Gamma(1 - mu) with the Temme combinations
/// gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2,
/// accurate for |mu| <= 1/2 including mu -> 0.
struct TemmeGammas {
  double gam1, gam2, gampl, gammi;
};
TemmeGammas temme_gammas(double mu);
}  // namespace detail

}  // namespace wwdtn
