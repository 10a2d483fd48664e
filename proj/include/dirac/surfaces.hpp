#pragma once

#include <functional>
#include <string>

#include "dirac/grid.hpp"
#include "dirac/types.hpp"

namespace dirac {

/// Cauchy surface as a graph x^0 = height(xvec) with analytic gradient and a
/// declared bound sup|grad| <= bound < 1. Gradients are supplied by the
/// family constructors, never finite-differenced.
struct CauchySurface {
  std::string name = "flat";
  double bound = 0.0;
  std::function<double(const Vec3&)> height = [](const Vec3&) { return 0.0; };
  std::function<Vec3(const Vec3&)> gradient = [](const Vec3&) { return Vec3::Zero(); };

  // graph-linear surfaces (height = offset + slope.x) admit separable
  // transform kernels; curved families leave `linear` false
  bool linear = true;
  double offset = 0.0;
  Vec3 slope = Vec3::Zero();

  Vec4 lift(const Vec3& x) const {
    return Vec4(height(x), x[0], x[1], x[2]);
  }
};

CauchySurface flat_surface(double t0 = 0.0);
CauchySurface tilted_surface(const Vec3& slope, double t0 = 0.0);
/// height = amp * exp(-|x|^2 / width^2); requires sup|grad| < 1.
CauchySurface bump_surface(double amp, double width);

/// Future-directed unit normal (upper components); throws if |grad| >= 1.
Vec4 unit_normal(const CauchySurface& s, const Vec3& x);

/// Density of the restricted spinor 3-form against d^3x in the graph chart:
/// gamma^0 + sum_k gamma_k d_k height  (= slash(n) sqrt(1-|grad|^2)).
Mat4 surface_form_matrix(const CauchySurface& s, const Vec3& x);

struct SurfaceValidation {
  double max_gradient = 0.0;
  double sup_inverse_norm = 0.0;  // sup || (gamma^0 slash(n))^{-1} ||_2
  bool pass = false;
};

SurfaceValidation validate_surface(const CauchySurface& s, const Grid3& grid);

/// Time-indexed family of Cauchy surfaces with strictly advancing height.
struct Foliation {
  std::string name = "flat";
  double bound = 0.0;
  std::function<double(double, const Vec3&)> height;
  std::function<Vec3(double, const Vec3&)> gradient;
  std::function<double(double, const Vec3&)> dheight_dt;  // > 0

  CauchySurface surface_at(double t) const;
  /// Time function: the unique t with x^0 = height(t, xvec).
  double tau(const Vec4& x) const;
  Vec4 normal(double t, const Vec3& x) const;
  /// Normal speed v with d_mu tau = n_mu / v.
  double speed(double t, const Vec3& x) const;

  // when the family is base + t e0, tau has a closed form and surfaces stay
  // graph-linear if the base is
  bool translated = false;
  CauchySurface base;
};

Foliation flat_foliation(const CauchySurface& base);
/// Surfaces height(t) = t + decay(t) * bump(x): a curved initial surface
/// relaxing to flat hyperplanes, with rate chosen to keep dheight_dt > 0.
Foliation relaxing_bump_foliation(double amp, double width, double rate);

}  // namespace dirac
