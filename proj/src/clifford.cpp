#include "dirac/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac {

namespace {

Mat2 pauli(int k) {
  Mat2 s = Mat2::Zero();
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cdouble(0, -1), cdouble(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index");
  }
  return s;
}

}  // namespace

GammaBasis::GammaBasis() {
  gamma_[0] = Mat4::Zero();
  gamma_[0].topLeftCorner<2, 2>() = Mat2::Identity();
  gamma_[0].bottomRightCorner<2, 2>() = -Mat2::Identity();
  for (int k = 1; k <= 3; ++k) {
    gamma_[k] = Mat4::Zero();
    gamma_[k].topRightCorner<2, 2>() = pauli(k);
    gamma_[k].bottomLeftCorner<2, 2>() = -pauli(k);
  }
}

double GammaBasis::clifford_residual() const {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const double g = (mu == nu) ? metric(mu) : 0.0;
      Mat4 anti = gamma_[mu] * gamma_[nu] + gamma_[nu] * gamma_[mu]
                  - 2.0 * g * Mat4::Identity();
      worst = std::max(worst, anti.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

const GammaBasis& gamma_standard() {
  static const GammaBasis basis;
  return basis;
}

Mat4 slash(const Vec4c& v) {
  const auto& g = gamma_standard();
  Mat4 out = v[0] * g.gamma(0);
  for (int k = 1; k <= 3; ++k) out -= v[k] * g.gamma(k);
  return out;
}

Mat4 slash(const Vec4& v) { return slash(Vec4c(v.cast<cdouble>())); }

const Mat4& weyl_transfer() {
  static const Mat4 t = [] {
    Mat4 m = Mat4::Zero();
    const double s = 1.0 / std::sqrt(2.0);
    m.topLeftCorner<2, 2>() = s * Mat2::Identity();
    m.topRightCorner<2, 2>() = s * Mat2::Identity();
    m.bottomLeftCorner<2, 2>() = s * Mat2::Identity();
    m.bottomRightCorner<2, 2>() = -s * Mat2::Identity();
    return m;
  }();
  return t;
}

SpinLorentzPair spin_from_sl2c(const Mat2& m) {
  if (std::abs(m.determinant() - 1.0) > 1e-12)
    throw std::invalid_argument("spin_from_sl2c: matrix is not unimodular");

  const Mat4& t = weyl_transfer();
  Mat4 block = Mat4::Zero();
  block.topLeftCorner<2, 2>() = m;
  block.bottomRightCorner<2, 2>() = m.adjoint().inverse();
  SpinLorentzPair pair;
  pair.spinor = t * block * t;  // T = T^-1

  const Mat4 sinv = t * [&] {
    Mat4 b = Mat4::Zero();
    b.topLeftCorner<2, 2>() = m.inverse();
    b.bottomRightCorner<2, 2>() = m.adjoint();
    return b;
  }() * t;

  const auto& g = gamma_standard();
  for (int mu = 0; mu < 4; ++mu) {
    const Mat4 a = sinv * g.gamma(mu) * pair.spinor;
    for (int nu = 0; nu < 4; ++nu)
      pair.lorentz(mu, nu) = 0.25 * (a * g.gamma_lower(nu)).trace().real();
  }
  return pair;
}

Mat2 sl2c_boost(double rapidity, int axis) {
  return (std::cosh(rapidity / 2) * Mat2::Identity()
          + std::sinh(rapidity / 2) * pauli(axis));
}

Mat2 sl2c_rotation(double angle, int axis) {
  return (std::cos(angle / 2) * Mat2::Identity()
          - cdouble(0, 1) * std::sin(angle / 2) * pauli(axis));
}

Mat2 random_sl2c(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat2 m;
  do {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = cdouble(n(rng), n(rng));
  } while (std::abs(m.determinant()) < 1e-3);
  return m / std::sqrt(m.determinant());
}

double spin_pair_residual(const SpinLorentzPair& p) {
  const auto& g = gamma_standard();
  double worst = 0.0;

  Mat4d gd = Mat4d::Zero();
  for (int mu = 0; mu < 4; ++mu) gd(mu, mu) = metric(mu);
  worst = std::max(worst,
                   (p.lorentz.transpose() * gd * p.lorentz - gd).cwiseAbs().maxCoeff());

  worst = std::max(worst, (p.spinor.adjoint() * g.gamma(0) * p.spinor
                           - g.gamma(0)).cwiseAbs().maxCoeff());

  const Mat4 sinv = p.spinor.inverse();
  for (int mu = 0; mu < 4; ++mu) {
    Mat4 lhs = Mat4::Zero();
    for (int nu = 0; nu < 4; ++nu) lhs += p.lorentz(mu, nu) * g.gamma(nu);
    worst = std::max(worst,
                     (lhs - sinv * g.gamma(mu) * p.spinor).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace dirac
