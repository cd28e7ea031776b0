#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace ntdeig::geometry {

/// Star-shaped radial curve r(theta). Families:
///   smoothstar:    r = 1 + a cos(w theta)
///   smoothnonsym:  r = 1 + a cos(w(theta + b sin theta))
///   circle:        r = radius
struct CurveSpec {
  enum class Family { smoothstar, smoothnonsym, circle };
  Family family = Family::circle;
  double a = 0.0;
  double b = 0.0;
  int w = 0;
  double radius = 1.0;

  static CurveSpec smoothstar(double a, int w);
  static CurveSpec smoothnonsym(double a, double b, int w);
  static CurveSpec circle(double radius);

  /// CLI syntax: "smoothstar:a,w", "smoothnonsym:a,b,w", "circle:r".
  static CurveSpec parse(const std::string& text);
  std::string str() const;
};

/// Discretization of the curve at N equispaced parameter nodes t_i = 2 pi i/N,
/// with all fields from closed-form differentiation of r(theta).
/// Immutable after construction; safe to share across threads.
struct BoundaryNodes {
  CurveSpec spec;
  int n = 0;
  Eigen::ArrayXd t;          // parameter values
  Eigen::Matrix2Xd z;        // positions
  Eigen::Matrix2Xd dz;       // dz/dt
  Eigen::Matrix2Xd ddz;      // d2z/dt2
  Eigen::ArrayXd speed;      // |dz/dt|
  Eigen::Matrix2Xd tangent;  // unit, counterclockwise
  Eigen::Matrix2Xd normal;   // unit, outward
  Eigen::ArrayXd xn;         // z . normal  (> 0, star-shape)
  Eigen::ArrayXd xt;         // z . tangent
  Eigen::ArrayXd kappa;      // signed curvature, = 1/R on a circle
  Eigen::ArrayXd w;          // trapezoid weights 2 pi speed / N

  double perimeter() const { return w.sum(); }
  double area() const { return 0.5 * (xn * w).sum(); }
};

/// Complex samples of a function on the N boundary nodes.
struct BoundaryScalarField {
  Eigen::VectorXcd values;
  const BoundaryNodes* nodes = nullptr;
};

inline BoundaryScalarField field(const BoundaryNodes& nodes,
                                 Eigen::VectorXcd values) {
  return {std::move(values), &nodes};
}

/// Builds the node set. Requires N even, N >= 16; rejects parameter
/// combinations that fail the star-shape condition min(x.n) > 0.
BoundaryNodes discretize(const CurveSpec& spec, int n);

/// d/dt (order 1) or d2/dt2 (order 2) of the trigonometric interpolant.
Eigen::VectorXcd spectral_derivative(const Eigen::VectorXcd& samples,
                                     int order);
BoundaryScalarField spectral_derivative(const BoundaryScalarField& f,
                                        int order);

/// Arclength derivative: (1/speed) d/dt through the parametrization.
BoundaryScalarField arclength_derivative(const BoundaryScalarField& f);

/// The scalar function m = (x.n) W((x.n)^{-1}) + div W, where W is the
/// tangential part of the dilation field: W = (x.t) d/ds in 2D. Real-valued.
BoundaryScalarField m_field(const BoundaryNodes& nodes);

/// <f, g> = sum conj(f_i) g_i w_i / xn_i, the (x.n)^{-1}-weighted inner
/// product. Conjugate-symmetric, positive definite.
std::complex<double> weighted_inner_product(const BoundaryScalarField& f,
                                            const BoundaryScalarField& g);

double weighted_norm(const BoundaryScalarField& f);

/// Node-count rule: about 6.3 points per wavelength on the boundary,
/// rounded up to even (and at least 16).
int default_node_count(const CurveSpec& spec, double k);

}  // namespace ntdeig::geometry
