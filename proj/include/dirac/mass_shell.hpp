#pragma once

#include "dirac/types.hpp"

namespace dirac {

double energy(const Vec3& pvec, double mass);

/// Point on one sheet of the real mass shell; sheet = +1 or -1.
struct OnShellMomentum {
  int sheet = +1;
  Vec3 pvec = Vec3::Zero();
  double mass = 1.0;

  double p0() const { return sheet * energy(pvec, mass); }
  Vec4 p4() const { return Vec4(p0(), pvec[0], pvec[1], pvec[2]); }
};

/// Orthogonal projector onto the Dirac bundle fibre at p:
/// P(p) = (pslash + m) gamma^0 / (2 p^0).
Mat4 bundle_projector(const OnShellMomentum& p);
Mat4 bundle_projector(double p0, const Vec3& pvec, double mass);

/// Signed density of the invariant shell measure against d^3p: m^2 / p^0.
double measure_weight(const OnShellMomentum& p);

/// Point on the complexified shell (p^0)^2 = pvec^2 + m^2.
/// branch = +1 picks the principal root, -1 its negative.
struct ComplexShellPoint {
  Vec3c pvec = Vec3c::Zero();
  int branch = +1;
  cdouble p0 = 0.0;
  double mass = 1.0;

  Vec4c p4() const { return Vec4c(p0, pvec[0], pvec[1], pvec[2]); }
  /// Both branches coincide (p0 = 0); the branch label is meaningless here.
  bool at_ramification() const { return std::abs(p0) == 0.0; }
};

ComplexShellPoint complex_lift(const Vec3c& pvec, int branch, double mass);

double im_norm(const Vec3c& v);  // |Im v|
double im_norm4(const Vec4c& v);

/// Slacks of the complexified-shell inequalities; a slack >= 0 means the
/// inequality holds. The exponential bound is existential in its constant,
/// so the empirically required constant is reported instead of a slack.
struct ShellInequalityReport {
  double slack_im_p0;       // |Im pvec| - |Im p0|
  double slack_im_lower;    // |Im p| - |Im pvec|
  double slack_im_upper;    // sqrt2 |Im pvec| - |Im p|
  double slack_norm_lower;  // |p| - m
  double slack_norm_upper;  // sqrt3 (m v |pvec|) - |p|
  double exp_bound_constant;  // (m v |pvec|) / ((m/12 v |p0|) e^{eps |Im pvec|})
  double exp_bound_admissible;  // sqrt3 * max(1, 12/(eps m))
  bool pass(double tol = 1e-12) const;
};

ShellInequalityReport check_shell_inequalities(const ComplexShellPoint& pt,
                                               double eps);

/// Holomorphic disc -> shell map through a base point near the ramification
/// set, built by the Euler-substitution recipe with delta = 1/12,
/// epsilon = 1/3, gamma = 1/6.
struct DiscMap {
  ComplexShellPoint base;
  Vec3c qvec;   // conj(pvec)/|pvec|
  cdouble r;    // principal root of qvec^2

  static constexpr double delta = 1.0 / 12.0;
  static constexpr double epsilon = 1.0 / 3.0;
  static constexpr double gamma = 1.0 / 6.0;
  /// h lower bound constant H = 2(sqrt(1-delta^2) - epsilon - delta).
  static double h_floor();

  cdouble h(cdouble t) const;
  cdouble g(cdouble t) const;
  Vec4c k(cdouble t) const;  // point on the complex shell
};

/// Requires |p0| <= m/12 (throws std::invalid_argument otherwise).
DiscMap disc_map_build(const ComplexShellPoint& p);

struct DiscMapCheck {
  double base_residual;      // |k(0) - p|
  double max_shell_residual; // sup |k0^2 - kvec^2 - m^2| over samples
  double max_kvec_dev;       // sup |kvec(t) - pvec|, |t| <= 1
  double min_k0_boundary;    // inf |k0(t)|, |t| = 1
  double min_h_abs;          // inf |h(t)|, |t| <= 1
  bool pass(double mass) const;
};

DiscMapCheck verify_disc_map(const DiscMap& map, int boundary_samples = 64,
                             int radii = 16);

}  // namespace dirac
