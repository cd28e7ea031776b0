#include "ntdeig/geometry.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ntdeig::geometry {

CurveSpec CurveSpec::smoothstar(double a, int w) {
  CurveSpec s;
  s.family = Family::smoothstar;
  s.a = a;
  s.w = w;
  return s;
}

CurveSpec CurveSpec::smoothnonsym(double a, double b, int w) {
  CurveSpec s;
  s.family = Family::smoothnonsym;
  s.a = a;
  s.b = b;
  s.w = w;
  return s;
}

CurveSpec CurveSpec::circle(double radius) {
  CurveSpec s;
  s.family = Family::circle;
  s.radius = radius;
  return s;
}

namespace {

std::vector<double> split_params(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

}  // namespace

CurveSpec CurveSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("CurveSpec: expected 'family:params', got '" +
                                text + "'");
  const std::string name = text.substr(0, colon);
  const auto p = split_params(text.substr(colon + 1));
  if (name == "smoothstar" && p.size() == 2)
    return smoothstar(p[0], static_cast<int>(std::lround(p[1])));
  if (name == "smoothnonsym" && p.size() == 3)
    return smoothnonsym(p[0], p[1], static_cast<int>(std::lround(p[2])));
  if (name == "circle" && p.size() == 1) return circle(p[0]);
  throw std::invalid_argument("CurveSpec: cannot parse '" + text + "'");
}

std::string CurveSpec::str() const {
  std::ostringstream os;
  os.precision(17);
  switch (family) {
    case Family::smoothstar:
      os << "smoothstar:" << a << "," << w;
      break;
    case Family::smoothnonsym:
      os << "smoothnonsym:" << a << "," << b << "," << w;
      break;
    case Family::circle:
      os << "circle:" << radius;
      break;
  }
  return os.str();
}

namespace {

// r(t) and its first two derivatives, in closed form.
void radial(const CurveSpec& s, double t, double& r, double& dr, double& ddr) {
  switch (s.family) {
    case CurveSpec::Family::circle:
      r = s.radius;
      dr = 0.0;
      ddr = 0.0;
      return;
    case CurveSpec::Family::smoothstar: {
      const double c = std::cos(s.w * t), sn = std::sin(s.w * t);
      r = 1.0 + s.a * c;
      dr = -s.a * s.w * sn;
      ddr = -s.a * s.w * s.w * c;
      return;
    }
    case CurveSpec::Family::smoothnonsym: {
      const double phi = s.w * (t + s.b * std::sin(t));
      const double dphi = s.w * (1.0 + s.b * std::cos(t));
      const double ddphi = -s.w * s.b * std::sin(t);
      const double c = std::cos(phi), sn = std::sin(phi);
      r = 1.0 + s.a * c;
      dr = -s.a * sn * dphi;
      ddr = -s.a * (c * dphi * dphi + sn * ddphi);
      return;
    }
  }
  throw std::logic_error("radial: unknown family");
}

}  // namespace

BoundaryNodes discretize(const CurveSpec& spec, int n) {
  if (n < 16 || n % 2 != 0)
    throw std::invalid_argument("discretize: N must be even and >= 16");
  BoundaryNodes b;
  b.spec = spec;
  b.n = n;
  b.t.resize(n);
  b.z.resize(2, n);
  b.dz.resize(2, n);
  b.ddz.resize(2, n);
  b.speed.resize(n);
  b.tangent.resize(2, n);
  b.normal.resize(2, n);
  b.xn.resize(n);
  b.xt.resize(n);
  b.kappa.resize(n);
  b.w.resize(n);

  double min_r = 1e300;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * M_PI * i / n;
    double r, dr, ddr;
    radial(spec, t, r, dr, ddr);
    min_r = std::min(min_r, r);
    const double c = std::cos(t), s = std::sin(t);
    const Eigen::Vector2d u(c, s), up(-s, c);
    const Eigen::Vector2d z = r * u;
    const Eigen::Vector2d dz = dr * u + r * up;
    const Eigen::Vector2d ddz = (ddr - r) * u + 2.0 * dr * up;
    const double sp = dz.norm();
    const Eigen::Vector2d tau = dz / sp;
    const Eigen::Vector2d nrm(tau.y(), -tau.x());
    b.t[i] = t;
    b.z.col(i) = z;
    b.dz.col(i) = dz;
    b.ddz.col(i) = ddz;
    b.speed[i] = sp;
    b.tangent.col(i) = tau;
    b.normal.col(i) = nrm;
    b.xn[i] = z.dot(nrm);
    b.xt[i] = z.dot(tau);
    b.kappa[i] = (dz.x() * ddz.y() - dz.y() * ddz.x()) / (sp * sp * sp);
    b.w[i] = 2.0 * M_PI * sp / n;
  }

  const double min_xn = b.xn.minCoeff();
  if (min_r <= 0.0 || min_xn <= 0.0) {
    std::ostringstream os;
    os << "discretize: curve " << spec.str()
       << " is not star-shaped about the origin (min x.n = " << min_xn
       << ", min r = " << min_r << ")";
    throw std::invalid_argument(os.str());
  }
  return b;
}

Eigen::VectorXcd spectral_derivative(const Eigen::VectorXcd& samples,
                                     int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("spectral_derivative: order must be 1 or 2");
  const int n = static_cast<int>(samples.size());
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> in(samples.data(), samples.data() + n);
  std::vector<std::complex<double>> coef(n);
  fft.fwd(coef, in);
  for (int m = 0; m < n; ++m) {
    const int freq = (m <= n / 2) ? m : m - n;
    if (order == 1) {
      // the Nyquist mode has no odd derivative in the real interpolant
      const double f = (2 * m == n) ? 0.0 : static_cast<double>(freq);
      coef[m] *= std::complex<double>(0.0, f);
    } else {
      coef[m] *= -static_cast<double>(freq) * freq;
    }
  }
  std::vector<std::complex<double>> out(n);
  fft.inv(out, coef);
  return Eigen::Map<Eigen::VectorXcd>(out.data(), n);
}

BoundaryScalarField spectral_derivative(const BoundaryScalarField& f,
                                        int order) {
  return {spectral_derivative(f.values, order), f.nodes};
}

BoundaryScalarField arclength_derivative(const BoundaryScalarField& f) {
  Eigen::VectorXcd d = spectral_derivative(f.values, 1);
  d.array() /= f.nodes->speed;
  return {std::move(d), f.nodes};
}

BoundaryScalarField m_field(const BoundaryNodes& nodes) {
  const int n = nodes.n;
  // m = xn * xt * d/ds(1/xn) + d/ds(xt), both derivatives spectral
  Eigen::VectorXcd inv_xn = (1.0 / nodes.xn).matrix().cast<std::complex<double>>();
  Eigen::VectorXcd xt = nodes.xt.matrix().cast<std::complex<double>>();
  Eigen::VectorXcd ds_inv_xn = spectral_derivative(inv_xn, 1);
  Eigen::VectorXcd ds_xt = spectral_derivative(xt, 1);
  Eigen::VectorXcd m(n);
  for (int i = 0; i < n; ++i) {
    const double inv_sp = 1.0 / nodes.speed[i];
    const double wg = nodes.xn[i] * nodes.xt[i] * (ds_inv_xn[i] * inv_sp).real();
    const double dv = (ds_xt[i] * inv_sp).real();
    m[i] = wg + dv;
  }
  return {std::move(m), &nodes};
}

std::complex<double> weighted_inner_product(const BoundaryScalarField& f,
                                            const BoundaryScalarField& g) {
  if (f.nodes != g.nodes || f.values.size() != g.values.size())
    throw std::invalid_argument("weighted_inner_product: mismatched node sets");
  const Eigen::ArrayXd wgt = f.nodes->w / f.nodes->xn;
  return (f.values.conjugate().array() * g.values.array() * wgt).sum();
}

double weighted_norm(const BoundaryScalarField& f) {
  const Eigen::ArrayXd wgt = f.nodes->w / f.nodes->xn;
  return std::sqrt((f.values.array().abs2() * wgt).sum());
}

int default_node_count(const CurveSpec& spec, double k) {
  const BoundaryNodes probe = discretize(spec, 256);
  const double per = probe.perimeter();
  int n = static_cast<int>(std::ceil(6.3 * k * per / (2.0 * M_PI)));
  if (n % 2) ++n;
  return std::max(n, 16);
}

}  // namespace ntdeig::geometry
