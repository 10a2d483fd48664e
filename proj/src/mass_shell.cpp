#include "dirac/mass_shell.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dirac/clifford.hpp"

namespace dirac {

double energy(const Vec3& pvec, double mass) {
  return std::sqrt(pvec.squaredNorm() + mass * mass);
}

Mat4 bundle_projector(double p0, const Vec3& pvec, double mass) {
  Vec4 p(p0, pvec[0], pvec[1], pvec[2]);
  return (slash(p) + mass * Mat4::Identity()) * gamma(0) / (2.0 * p0);
}

Mat4 bundle_projector(const OnShellMomentum& p) {
  return bundle_projector(p.p0(), p.pvec, p.mass);
}

double measure_weight(const OnShellMomentum& p) {
  return p.mass * p.mass / p.p0();
}

ComplexShellPoint complex_lift(const Vec3c& pvec, int branch, double mass) {
  ComplexShellPoint pt;
  pt.pvec = pvec;
  pt.branch = branch;
  pt.mass = mass;
  const cdouble sq = pvec[0] * pvec[0] + pvec[1] * pvec[1] + pvec[2] * pvec[2]
                     + mass * mass;
  pt.p0 = static_cast<double>(branch) * std::sqrt(sq);
  return pt;
}

double im_norm(const Vec3c& v) {
  return std::sqrt(v[0].imag() * v[0].imag() + v[1].imag() * v[1].imag()
                   + v[2].imag() * v[2].imag());
}

double im_norm4(const Vec4c& v) {
  double s = 0;
  for (int i = 0; i < 4; ++i) s += v[i].imag() * v[i].imag();
  return std::sqrt(s);
}

bool ShellInequalityReport::pass(double tol) const {
  return slack_im_p0 >= -tol && slack_im_lower >= -tol && slack_im_upper >= -tol
         && slack_norm_lower >= -tol && slack_norm_upper >= -tol
         && exp_bound_constant <= exp_bound_admissible + tol;
}

ShellInequalityReport check_shell_inequalities(const ComplexShellPoint& pt,
                                               double eps) {
  const double m = pt.mass;
  const double im_p0 = std::abs(pt.p0.imag());
  const double im_pv = im_norm(pt.pvec);
  const double im_p = im_norm4(pt.p4());
  const double abs_p = pt.p4().norm();
  const double abs_pv = pt.pvec.norm();

  ShellInequalityReport r{};
  r.slack_im_p0 = im_pv - im_p0;
  r.slack_im_lower = im_p - im_pv;
  r.slack_im_upper = std::sqrt(2.0) * im_pv - im_p;
  r.slack_norm_lower = abs_p - m;
  r.slack_norm_upper = std::sqrt(3.0) * std::max(m, abs_pv) - abs_p;
  const double denom = std::max(m / 12.0, std::abs(pt.p0)) * std::exp(eps * im_pv);
  r.exp_bound_constant = std::max(m, abs_pv) / denom;
  r.exp_bound_admissible = std::sqrt(3.0) * std::max(1.0, 12.0 / (eps * m));
  return r;
}

double DiscMap::h_floor() {
  return 2.0 * (std::sqrt(1.0 - delta * delta) - epsilon - delta);
}

cdouble DiscMap::h(cdouble t) const {
  const double m = base.mass;
  return 2.0 * (base.pvec.norm() - epsilon * m * r * t - base.p0 * r);
}

cdouble DiscMap::g(cdouble t) const {
  const double m = base.mass;
  const cdouble emt = epsilon * m * t;
  return (emt * emt + 2.0 * base.p0 * emt) / h(t);
}

Vec4c DiscMap::k(cdouble t) const {
  const double m = base.mass;
  const cdouble gt = g(t);
  Vec4c out;
  out[0] = base.p0 + epsilon * m * t + gt * r;
  for (int j = 0; j < 3; ++j) out[j + 1] = base.pvec[j] + gt * qvec[j];
  return out;
}

DiscMap disc_map_build(const ComplexShellPoint& p) {
  const double m = p.mass;
  if (std::abs(p.p0) > m / 12.0 + 1e-15)
    throw std::invalid_argument("disc_map_build: requires |p0| <= m/12");
  const double norm_pv = p.pvec.norm();
  if (norm_pv <= 0.0)
    throw std::invalid_argument("disc_map_build: requires |pvec| > 0");

  DiscMap map;
  map.base = p;
  map.qvec = p.pvec.conjugate() / norm_pv;
  const cdouble q2 = map.qvec[0] * map.qvec[0] + map.qvec[1] * map.qvec[1]
                     + map.qvec[2] * map.qvec[2];
  map.r = std::sqrt(q2);
  return map;
}

DiscMapCheck verify_disc_map(const DiscMap& map, int boundary_samples,
                             int radii) {
  const double m = map.base.mass;
  DiscMapCheck chk{};
  chk.base_residual = (map.k(0.0) - map.base.p4()).norm();
  chk.min_k0_boundary = std::numeric_limits<double>::infinity();
  chk.min_h_abs = std::numeric_limits<double>::infinity();

  for (int ir = 1; ir <= radii; ++ir) {
    const double rho = static_cast<double>(ir) / radii;
    for (int ib = 0; ib < boundary_samples; ++ib) {
      const double phi = 2.0 * pi * ib / boundary_samples;
      const cdouble t = std::polar(rho, phi);
      const Vec4c kt = map.k(t);
      const cdouble shell = kt[0] * kt[0] - kt[1] * kt[1] - kt[2] * kt[2]
                            - kt[3] * kt[3] - m * m;
      chk.max_shell_residual = std::max(chk.max_shell_residual, std::abs(shell));
      Vec3c dk(kt[1] - map.base.pvec[0], kt[2] - map.base.pvec[1],
               kt[3] - map.base.pvec[2]);
      chk.max_kvec_dev = std::max(chk.max_kvec_dev, dk.norm());
      chk.min_h_abs = std::min(chk.min_h_abs, std::abs(map.h(t)));
      if (ir == radii)
        chk.min_k0_boundary = std::min(chk.min_k0_boundary, std::abs(kt[0]));
    }
  }
  return chk;
}

bool DiscMapCheck::pass(double mass) const {
  return base_residual <= 1e-12 && max_shell_residual <= 1e-12
         && max_kvec_dev <= mass / 6.0 + 1e-12
         && min_k0_boundary >= mass / 12.0 - 1e-12
         && min_h_abs >= mass * DiscMap::h_floor() - 1e-12;
}

}  // namespace dirac
