#pragma once

#include <complex>

namespace ntdeig::specfun {

/// Euler-Mascheroni constant, full double precision.
inline constexpr double euler_gamma = 0.5772156649015329;

/// Values of H0^(1)(x) and H1^(1)(x), the outgoing Hankel functions.
struct HankelPair {
  std::complex<double> h0;
  std::complex<double> h1;
};

/// All four real Bessel values at a common abscissa, computed in one pass.
struct Bessel04 {
  double j0;
  double j1;
  double y0;
  double y1;
};

/// Real-argument cylindrical Bessel functions of order 0 and 1.
///
/// Accuracy target is a relative error (measured against the oscillation
/// amplitude sqrt(2/(pi x)) for large x) of a few ULP, uniformly on
/// (0, 4000]. The J functions accept x = 0; the Y functions require x > 0
/// and throw std::domain_error otherwise.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);

/// One-pass evaluation of J0, J1, Y0, Y1 (x > 0). This is the fast path
/// used by the kernel assembly, which needs all four per matrix entry.
Bessel04 bessel04(double x);

/// H0^(1)(x) = J0 + iY0 and H1^(1)(x) = J1 + iY1 for x > 0.
HankelPair hankel1(double x);

/// Abscissa at which the implementation switches from the backward-
/// recurrence/Neumann-series branch to the large-x Hankel asymptotic
/// expansion. Exposed so the cross-branch continuity can be tested.
inline constexpr double branch_switch_x = 20.0;

namespace detail {
// Both branches callable on their closure overlap, for continuity checks.
Bessel04 bessel04_recurrence(double x);  // valid on (0, branch_switch_x]
Bessel04 bessel04_asymptotic(double x);  // valid on [branch_switch_x, inf)
}  // namespace detail

}  // namespace ntdeig::specfun
