#include "dirac/surfaces.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac/clifford.hpp"

namespace dirac {

CauchySurface flat_surface(double t0) {
  CauchySurface s;
  s.name = "flat";
  s.bound = 0.0;
  s.height = [t0](const Vec3&) { return t0; };
  s.gradient = [](const Vec3&) { return Vec3::Zero(); };
  s.linear = true;
  s.offset = t0;
  s.slope = Vec3::Zero();
  return s;
}

CauchySurface tilted_surface(const Vec3& slope, double t0) {
  if (slope.norm() >= 1.0)
    throw std::invalid_argument("tilted_surface: |slope| must be < 1");
  CauchySurface s;
  s.name = "tilted";
  s.bound = slope.norm();
  s.height = [slope, t0](const Vec3& x) { return t0 + slope.dot(x); };
  s.gradient = [slope](const Vec3&) { return slope; };
  s.linear = true;
  s.offset = t0;
  s.slope = slope;
  return s;
}

CauchySurface bump_surface(double amp, double width) {
  // sup|grad| = |amp| sqrt(2/e) / width, attained at |x| = width/sqrt(2)
  const double sup_grad = std::abs(amp) * std::sqrt(2.0 / std::exp(1.0)) / width;
  if (sup_grad >= 1.0)
    throw std::invalid_argument("bump_surface: gradient bound >= 1");
  CauchySurface s;
  s.name = "bump";
  s.bound = sup_grad;
  const double w2 = width * width;
  s.height = [amp, w2](const Vec3& x) {
    return amp * std::exp(-x.squaredNorm() / w2);
  };
  s.gradient = [amp, w2](const Vec3& x) {
    return Vec3(-2.0 * amp / w2 * std::exp(-x.squaredNorm() / w2) * x);
  };
  s.linear = false;
  return s;
}

Vec4 unit_normal(const CauchySurface& s, const Vec3& x) {
  const Vec3 g = s.gradient(x);
  const double g2 = g.squaredNorm();
  if (g2 >= 1.0)
    throw std::invalid_argument("unit_normal: surface gradient reaches 1");
  const double c = std::sqrt(1.0 - g2);
  return Vec4(1.0 / c, g[0] / c, g[1] / c, g[2] / c);
}

Mat4 surface_form_matrix(const CauchySurface& s, const Vec3& x) {
  const Vec3 g = s.gradient(x);
  Mat4 out = gamma(0);
  for (int k = 0; k < 3; ++k) out -= g[k] * gamma(k + 1);
  return out;
}

SurfaceValidation validate_surface(const CauchySurface& s, const Grid3& grid) {
  SurfaceValidation v;
  for (std::int64_t i = 0; i < grid.size(); ++i) {
    const Vec3 x = grid.node(i);
    const double gn = s.gradient(x).norm();
    v.max_gradient = std::max(v.max_gradient, gn);
    if (gn < 1.0) {
      // || (gamma^0 n-slash)^{-1} || = 1 / smallest singular value
      const Mat4 a = gamma(0) * slash(unit_normal(s, x));
      Eigen::JacobiSVD<Mat4> svd(a);
      v.sup_inverse_norm =
          std::max(v.sup_inverse_norm, 1.0 / svd.singularValues().minCoeff());
    }
  }
  v.pass = v.max_gradient < 1.0 && v.max_gradient <= s.bound + 1e-12;
  return v;
}

CauchySurface Foliation::surface_at(double t) const {
  if (translated) {
    CauchySurface s = base;
    const double t0 = t;
    auto base_h = base.height;
    s.height = [base_h, t0](const Vec3& x) { return base_h(x) + t0; };
    s.offset = base.offset + t;
    s.name = base.name + "+t";
    return s;
  }
  CauchySurface s;
  s.name = name + "@t";
  s.bound = bound;
  auto h = height;
  auto g = gradient;
  s.height = [h, t](const Vec3& x) { return h(t, x); };
  s.gradient = [g, t](const Vec3& x) { return g(t, x); };
  s.linear = false;
  return s;
}

double Foliation::tau(const Vec4& x) const {
  const Vec3 xv(x[1], x[2], x[3]);
  if (translated) return x[0] - base.height(xv);
  // height(t, xv) is strictly increasing in t (dheight_dt > 0)
  double lo = x[0] - 64.0, hi = x[0] + 64.0;
  while (height(lo, xv) > x[0]) { hi = lo; lo = 2 * lo - x[0] - 64.0; }
  while (height(hi, xv) < x[0]) { lo = hi; hi = 2 * hi - x[0] + 64.0; }
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (height(mid, xv) < x[0] ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Vec4 Foliation::normal(double t, const Vec3& x) const {
  const Vec3 g = gradient(t, x);
  const double c = std::sqrt(1.0 - g.squaredNorm());
  return Vec4(1.0 / c, g[0] / c, g[1] / c, g[2] / c);
}

double Foliation::speed(double t, const Vec3& x) const {
  const Vec3 g = gradient(t, x);
  return dheight_dt(t, x) / std::sqrt(1.0 - g.squaredNorm());
}

Foliation flat_foliation(const CauchySurface& base) {
  Foliation f;
  f.name = base.name + "-translated";
  f.bound = base.bound;
  f.translated = true;
  f.base = base;
  auto bh = base.height;
  auto bg = base.gradient;
  f.height = [bh](double t, const Vec3& x) { return t + bh(x); };
  f.gradient = [bg](double, const Vec3& x) { return bg(x); };
  f.dheight_dt = [](double, const Vec3&) { return 1.0; };
  return f;
}

Foliation relaxing_bump_foliation(double amp, double width, double rate) {
  const double sup_grad = std::abs(amp) * std::sqrt(2.0 / std::exp(1.0)) / width;
  if (sup_grad >= 1.0)
    throw std::invalid_argument("relaxing_bump_foliation: gradient bound >= 1");
  if (std::abs(amp) * rate >= 1.0)
    throw std::invalid_argument("relaxing_bump_foliation: rate too fast for v > 0");
  Foliation f;
  f.name = "relaxing-bump";
  f.bound = sup_grad;
  const double w2 = width * width;
  // decay(t) = 1/(1 + (rate t)^2) for t >= 0, = 1 for t < 0 is not smooth;
  // use exp(-(rate t)^2) instead, |d decay/dt| <= rate sqrt(2/e) < rate
  f.height = [amp, w2, rate](double t, const Vec3& x) {
    return t + amp * std::exp(-rate * rate * t * t)
               * std::exp(-x.squaredNorm() / w2);
  };
  f.gradient = [amp, w2, rate](double t, const Vec3& x) {
    return Vec3(-2.0 * amp / w2 * std::exp(-rate * rate * t * t)
                * std::exp(-x.squaredNorm() / w2) * x);
  };
  f.dheight_dt = [amp, w2, rate](double t, const Vec3& x) {
    return 1.0 - 2.0 * rate * rate * t * amp * std::exp(-rate * rate * t * t)
                 * std::exp(-x.squaredNorm() / w2);
  };
  return f;
}

}  // namespace dirac
