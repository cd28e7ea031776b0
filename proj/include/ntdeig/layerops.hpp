#pragma once

#include <Eigen/Dense>

#include "ntdeig/geometry.hpp"

namespace ntdeig::layerops {

enum class Kind { S, D, Dt };

/// Dense Nystrom matrix of a Helmholtz boundary integral operator at
/// wavenumber k. The matrix acts on raw node samples: quadrature weights
/// and the Martensen-Kussmaul product rule are folded into the entries.
struct LayerMatrix {
  Eigen::MatrixXcd entries;
  double k = 0.0;
  Kind kind = Kind::S;
  const geometry::BoundaryNodes* nodes = nullptr;
};

/// Martensen-Kussmaul product-quadrature weights for the periodized log
/// kernel: R_j = -sum_{m=1}^{N/2-1} (2/m) cos(m 2 pi j / N) - (2/N) cos(pi j).
/// Requires N even.
Eigen::ArrayXd mk_weights(int n);

/// Assembles S(k), D(k) or Dt(k) with the Kress kernel splitting; diagonal
/// entries come from the analytic limits. Requires k > 0.
LayerMatrix assemble(Kind kind, double k, const geometry::BoundaryNodes& nodes);

/// S(k) and D(k) in one pass (shares the Bessel evaluations; entries are
/// bit-identical to the single-kind assembly).
std::pair<LayerMatrix, LayerMatrix> assemble_sd(
    double k, const geometry::BoundaryNodes& nodes);

/// Result of a potential evaluation at interior points. A point closer to
/// the boundary than 5 * perimeter / N is flagged; its value is still
/// returned but quadrature accuracy is not guaranteed there.
struct PotentialValues {
  Eigen::VectorXcd values;
  std::vector<bool> near_boundary;
};

/// Single-layer potential sum_j G0(k; x, z_j) sigma_j w_j at interior points.
PotentialValues single_layer_eval(double k, const geometry::BoundaryScalarField& density,
                                  const Eigen::Matrix2Xd& points);

/// Double-layer potential sum_j dG0/dn_y (k; x, z_j) tau_j w_j.
PotentialValues double_layer_eval(double k, const geometry::BoundaryScalarField& density,
                                  const Eigen::Matrix2Xd& points);

}  // namespace ntdeig::layerops
