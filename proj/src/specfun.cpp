#include "ntdeig/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ntdeig::specfun {

namespace detail {

// Small/medium x: Miller backward recurrence for the J_n family, then the
// Neumann-series expressions of Y0 and Y1 in terms of the J_n. All values
// come out with relative accuracy near machine epsilon w.r.t. the
// oscillation amplitude, without any fitted coefficient tables.
Bessel04 bessel04_recurrence(double x) {
  // Start order: high enough that J_M(x)/J_0(x) is far below 1e-17.
  int M = static_cast<int>(std::ceil(1.2 * x + 12.0 * std::cbrt(x))) + 34;
  if (M % 2) ++M;

  std::vector<double> j(M + 2, 0.0);
  j[M + 1] = 0.0;
  j[M] = 1e-30;
  double norm = 0.0;  // accumulates J0 + 2*sum J_{2k}
  for (int n = M; n >= 1; --n) {
    j[n - 1] = (2.0 * n / x) * j[n] - j[n + 1];
    if (n - 1 > 0 && (n - 1) % 2 == 0) norm += 2.0 * j[n - 1];
    if (std::abs(j[n - 1]) > 1e250) {  // rescale guard for tiny x
      const double s = 1e-250;
      for (int m = n - 1; m <= M + 1; ++m) j[m] *= s;
      norm *= s;
    }
  }
  norm += j[0];
  const double inv = 1.0 / norm;
  for (double& v : j) v *= inv;

  const double logfac = std::log(0.5 * x) + euler_gamma;
  // Y0 = (2/pi) [ (log(x/2)+gamma) J0 + 2 sum_{k>=1} (-1)^{k+1} J_{2k}/k ]
  // Y1 = -dY0/dx, with J' expressed through neighbouring orders.
  double s0 = 0.0, s1 = 0.0, sign = 1.0;
  for (int k = 1; 2 * k + 1 <= M; ++k) {
    s0 += sign * j[2 * k] / k;
    s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k;
    sign = -sign;
  }
  const double two_over_pi = 2.0 / M_PI;
  Bessel04 r;
  r.j0 = j[0];
  r.j1 = j[1];
  r.y0 = two_over_pi * (logfac * j[0] + 2.0 * s0);
  r.y1 = two_over_pi * (logfac * j[1] - j[0] / x - s1);
  return r;
}

namespace {

// One Hankel asymptotic pair P_nu, Q_nu with optimal truncation.
void hankel_pq(double nu, double x, double& p, double& q) {
  // P = sum_j (-1)^j a_{2j} x^{-2j},  Q = sum_j (-1)^j a_{2j+1} x^{-2j-1},
  // a_0 = 1, a_{i+1} = a_i (mu - (2i+1)^2) / (8(i+1)), mu = 4 nu^2.
  const double mu = 4.0 * nu * nu;
  p = 1.0;
  q = 0.0;
  double a = 1.0;       // a_i, running coefficient
  double xp = 1.0;      // x^{-i}
  double prev = 1e300;  // previous |term|, for optimal truncation
  for (int i = 1; i <= 60; ++i) {
    a *= (mu - (2.0 * i - 1.0) * (2.0 * i - 1.0)) / (8.0 * i);
    xp /= x;
    const double term = a * xp;
    if (std::abs(term) >= prev) break;  // divergence onset
    prev = std::abs(term);
    const int j = (i % 2 == 1) ? (i - 1) / 2 : i / 2;
    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    if (i % 2 == 1)
      q += sgn * term;
    else
      p += sgn * term;
    if (prev < 1e-18) break;
  }
}

}  // namespace

Bessel04 bessel04_asymptotic(double x) {
  double p0, q0, p1, q1;
  hankel_pq(0.0, x, p0, q0);
  hankel_pq(1.0, x, p1, q1);
  const double amp = std::sqrt(2.0 / (M_PI * x));
  // chi_nu = x - (2nu+1)pi/4 expanded by angle addition: sin/cos of large x
  // get correct argument reduction from libm, the shift stays exact.
  const double cx = std::cos(x), sx = std::sin(x);
  const double rs2 = M_SQRT1_2;
  const double c0 = (cx + sx) * rs2, s0 = (sx - cx) * rs2;
  const double c1 = (sx - cx) * rs2, s1 = -(sx + cx) * rs2;
  Bessel04 r;
  r.j0 = amp * (p0 * c0 - q0 * s0);
  r.y0 = amp * (p0 * s0 + q0 * c0);
  r.j1 = amp * (p1 * c1 - q1 * s1);
  r.y1 = amp * (p1 * s1 + q1 * c1);
  return r;
}

}  // namespace detail

Bessel04 bessel04(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel04: requires x > 0");
  return (x <= branch_switch_x) ? detail::bessel04_recurrence(x)
                                : detail::bessel04_asymptotic(x);
}

double bessel_j0(double x) {
  if (!(x >= 0.0)) throw std::domain_error("bessel_j0: requires x >= 0");
  if (x == 0.0) return 1.0;
  return bessel04(x).j0;
}

double bessel_j1(double x) {
  if (!(x >= 0.0)) throw std::domain_error("bessel_j1: requires x >= 0");
  if (x == 0.0) return 0.0;
  return bessel04(x).j1;
}

double bessel_y0(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_y0: requires x > 0");
  return bessel04(x).y0;
}

double bessel_y1(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_y1: requires x > 0");
  return bessel04(x).y1;
}

HankelPair hankel1(double x) {
  if (!(x > 0.0)) throw std::domain_error("hankel1: requires x > 0");
  const Bessel04 b = bessel04(x);
  return {{b.j0, b.y0}, {b.j1, b.y1}};
}

}  // namespace ntdeig::specfun
