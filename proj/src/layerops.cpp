#include "ntdeig/layerops.hpp"

#include <cmath>
#include <stdexcept>

#include "ntdeig/specfun.hpp"

namespace ntdeig::layerops {

using geometry::BoundaryNodes;
using geometry::BoundaryScalarField;
using specfun::euler_gamma;
using Complex = std::complex<double>;

Eigen::ArrayXd mk_weights(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("mk_weights: N must be even");
  Eigen::ArrayXd r(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int m = 1; m <= n / 2 - 1; ++m)
      s -= (2.0 / m) * std::cos(m * 2.0 * M_PI * j / n);
    s -= (2.0 / n) * std::cos(M_PI * j);
    r[j] = s;
  }
  return r;
}

namespace {

// Kress splitting K(s,t) = log(4 sin^2((s-t)/2)) K1(s,t) + K2(s,t) of the
// parametrized kernels, with both K1 and K2 analytic. The diagonal of K2
// is the analytic limit; the singular kernel itself is never evaluated
// on the diagonal.
struct SplitEntries {
  Complex s_k1, s_k2;  // single layer
  Complex d_k1, d_k2;  // double layer
};

// Off-diagonal entries at (i, j), i != j.
SplitEntries split_offdiag(double k, const BoundaryNodes& b, int i, int j) {
  const Eigen::Vector2d d = b.z.col(i) - b.z.col(j);
  const double r = d.norm();
  const double sp = b.speed[j];
  const auto bes = specfun::bessel04(k * r);
  const double dt = 0.5 * (b.t[i] - b.t[j]);
  const double logterm = std::log(4.0 * std::sin(dt) * std::sin(dt));

  SplitEntries e;
  // S: kernel (i/4) H0(kr) sp; K1 = -(1/4pi) J0(kr) sp
  const Complex h0(bes.j0, bes.y0);
  e.s_k1 = Complex(-bes.j0 / (4.0 * M_PI) * sp, 0.0);
  e.s_k2 = Complex(0.0, 0.25) * h0 * sp - e.s_k1 * logterm;
  // D: kernel (ik/4) H1(kr) cosf sp with cosf = (z_i - z_j).n_j / r;
  // K1 = -(k/4pi) J1(kr) cosf sp
  const double cosf = d.dot(b.normal.col(j)) / r;
  const Complex h1(bes.j1, bes.y1);
  e.d_k1 = Complex(-k / (4.0 * M_PI) * bes.j1 * cosf * sp, 0.0);
  e.d_k2 = Complex(0.0, 0.25 * k) * h1 * cosf * sp - e.d_k1 * logterm;
  return e;
}

SplitEntries split_diag(double k, const BoundaryNodes& b, int i) {
  const double sp = b.speed[i];
  SplitEntries e;
  e.s_k1 = Complex(-sp / (4.0 * M_PI), 0.0);
  e.s_k2 = (Complex(0.0, 0.25) -
            (euler_gamma + std::log(0.5 * k * sp)) / (2.0 * M_PI)) *
           sp;
  e.d_k1 = Complex(0.0, 0.0);
  e.d_k2 = Complex(-b.kappa[i] * sp / (4.0 * M_PI), 0.0);
  return e;
}

void assemble_pair(double k, const BoundaryNodes& b, Eigen::MatrixXcd* s_out,
                   Eigen::MatrixXcd* d_out) {
  if (!(k > 0.0)) throw std::invalid_argument("assemble: requires k > 0");
  const int n = b.n;
  const Eigen::ArrayXd r = mk_weights(n);
  const double h = 2.0 * M_PI / n;
  if (s_out) s_out->resize(n, n);
  if (d_out) d_out->resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const SplitEntries e =
          (i == j) ? split_diag(k, b, i) : split_offdiag(k, b, i, j);
      const double rw = r[std::abs(i - j)];
      if (s_out) (*s_out)(i, j) = h * (rw * e.s_k1 + e.s_k2);
      if (d_out) (*d_out)(i, j) = h * (rw * e.d_k1 + e.d_k2);
    }
  }
}

}  // namespace

LayerMatrix assemble(Kind kind, double k, const BoundaryNodes& nodes) {
  LayerMatrix m;
  m.k = k;
  m.kind = kind;
  m.nodes = &nodes;
  switch (kind) {
    case Kind::S:
      assemble_pair(k, nodes, &m.entries, nullptr);
      break;
    case Kind::D:
      assemble_pair(k, nodes, nullptr, &m.entries);
      break;
    case Kind::Dt: {
      // Nystrom transposition on L2 of arclength: exchange the speed factors
      Eigen::MatrixXcd d;
      assemble_pair(k, nodes, nullptr, &d);
      m.entries.resize(nodes.n, nodes.n);
      for (int i = 0; i < nodes.n; ++i)
        for (int j = 0; j < nodes.n; ++j)
          m.entries(i, j) = d(j, i) * nodes.speed[j] / nodes.speed[i];
      break;
    }
  }
  return m;
}

std::pair<LayerMatrix, LayerMatrix> assemble_sd(double k,
                                                const BoundaryNodes& nodes) {
  LayerMatrix s, d;
  s.k = d.k = k;
  s.kind = Kind::S;
  d.kind = Kind::D;
  s.nodes = d.nodes = &nodes;
  assemble_pair(k, nodes, &s.entries, &d.entries);
  return {std::move(s), std::move(d)};
}

namespace {

template <class Kernel>
PotentialValues eval_potential(const BoundaryScalarField& density,
                               const Eigen::Matrix2Xd& points, Kernel kernel,
                               const BoundaryNodes& b) {
  const int np = static_cast<int>(points.cols());
  const double hmargin = 5.0 * b.perimeter() / b.n;
  PotentialValues out;
  out.values.resize(np);
  out.near_boundary.assign(np, false);
  for (int p = 0; p < np; ++p) {
    const Eigen::Vector2d x = points.col(p);
    Complex acc(0.0, 0.0);
    double mindist = 1e300;
    for (int j = 0; j < b.n; ++j) {
      const Eigen::Vector2d d = x - b.z.col(j);
      const double r = d.norm();
      mindist = std::min(mindist, r);
      acc += kernel(r, d, j) * density.values[j] * b.w[j];
    }
    out.values[p] = acc;
    out.near_boundary[p] = (mindist <= hmargin);
  }
  return out;
}

}  // namespace

PotentialValues single_layer_eval(double k, const BoundaryScalarField& density,
                                  const Eigen::Matrix2Xd& points) {
  const BoundaryNodes& b = *density.nodes;
  return eval_potential(
      density, points,
      [k](double r, const Eigen::Vector2d&, int) {
        const auto bes = specfun::bessel04(k * r);
        return Complex(0.0, 0.25) * Complex(bes.j0, bes.y0);
      },
      b);
}

PotentialValues double_layer_eval(double k, const BoundaryScalarField& density,
                                  const Eigen::Matrix2Xd& points) {
  const BoundaryNodes& b = *density.nodes;
  return eval_potential(
      density, points,
      [k, &b](double r, const Eigen::Vector2d& d, int j) {
        const auto bes = specfun::bessel04(k * r);
        const double cosf = d.dot(b.normal.col(j)) / r;
        return Complex(0.0, 0.25 * k) * Complex(bes.j1, bes.y1) * cosf;
      },
      b);
}

}  // namespace ntdeig::layerops
