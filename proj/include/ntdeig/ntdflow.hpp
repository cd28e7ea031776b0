#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ntdeig/geometry.hpp"

namespace ntdeig::ntdflow {

enum class Scheme { cayley, direct };

/// One (beta, f) eigenpair of the weighted NtD operator at the anchor
/// frequency. f has unit weighted norm, is phase-fixed and real to
/// rounding. `lambda` is the source eigenvalue: of the Cayley transform
/// R_eta for the cayley scheme, of the NtD matrix itself for the direct
/// scheme. `imag_beta` and `imag_f_norm` record what was discarded when
/// realifying; `residual` is || (1/2 + D)(beta f) - S[(x.n)^{-1} f] ||_2
/// / ||f||_2, the boundary-data identity applied to the extended
/// eigenfunction.
struct NtdEigenpair {
  double beta = 0.0;
  geometry::BoundaryScalarField f;
  std::complex<double> lambda;
  double residual = 0.0;
  double kstar = 0.0;
  double imag_beta = 0.0;
  double imag_f_norm = 0.0;
};

struct NtdSpectrum {
  double kstar = 0.0;
  double eta = 0.0;
  Scheme scheme = Scheme::cayley;
  std::vector<NtdEigenpair> pairs;  // sorted ascending in beta
  double rcond = 0.0;               // of K_- (cayley) or 1/2 + D (direct)
  bool condition_flag = false;      // direct scheme near a Neumann pole
};

/// Full spectrum of Theta(kstar) through the Cayley transform
/// R_eta = K_-^{-1} K_+, K_pm = pm(1/2 + D) + i eta S (x.n)^{-1},
/// eigenvalues mapped back by beta = (i/eta)(1+lambda)/(1-lambda).
/// Nothing is filtered here; see select_window. Default eta = kstar.
/// Throws on a numerically singular K_- (rcond < 1e-15).
NtdSpectrum ntd_spectrum_cayley(double kstar,
                                const geometry::BoundaryNodes& nodes,
                                double eta);

/// Direct discretization Theta = (1/2 + D)^{-1} S (x.n)^{-1}. Not robust
/// near Neumann eigenfrequencies; near-singular (1/2 + D) sets
/// condition_flag instead of throwing. For comparison only.
NtdSpectrum ntd_spectrum_direct(double kstar,
                                const geometry::BoundaryNodes& nodes);

/// Sorted beta values only (no eigenvectors); cheaper, used by flow scans.
Eigen::ArrayXd ntd_eigenvalues_cayley(double kstar,
                                      const geometry::BoundaryNodes& nodes,
                                      double eta);

/// Keeps the pairs whose linear image khat = kstar/(1+beta) lands in the
/// half-open window [kstar, kstar + eps): exactly
/// -eps/(kstar+eps) < beta < 0. beta = 0 is excluded (previous window).
std::vector<NtdEigenpair> select_window(const NtdSpectrum& spec, double eps);

struct FlowCrossing {
  double k = 0.0;      // interpolated crossing location
  double slope = 0.0;  // finite-difference d beta / d k
};

struct FlowTable {
  Eigen::ArrayXd k;
  std::vector<Eigen::ArrayXd> betas;  // sorted ascending, per sample
  std::vector<FlowCrossing> crossings;
};

/// Evaluates the Cayley spectrum on an equispaced k grid; detects zero
/// crossings of the eigenvalue branches between adjacent samples by
/// nearest-value continuation and records their finite-difference slopes.
FlowTable flow_scan(double k_lo, double k_hi, int samples,
                    const geometry::BoundaryNodes& nodes);

/// Central-difference slope of the crossing branch at a known
/// eigenfrequency kj: (smallest positive beta at kj+delta minus largest
/// negative beta at kj-delta) / (2 delta).
double crossing_slope(double kj, double delta,
                      const geometry::BoundaryNodes& nodes);

}  // namespace ntdeig::ntdflow
