#pragma once

#include <complex>
#include <Eigen/Dense>

namespace dirac {

using cdouble = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4d = Eigen::Matrix4d;
using Vec4c = Eigen::Vector4cd;
using Vec3c = Eigen::Vector3cd;
using Vec4 = Eigen::Vector4d;
using Vec3 = Eigen::Vector3d;

inline constexpr double pi = 3.14159265358979323846;

/// Minkowski metric signature (+,-,-,-), diagonal entry for index mu.
inline constexpr double metric(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Minkowski product p.x = p^0 x^0 - pvec.xvec of upper-component 4-vectors.
inline double minkowski_dot(const Vec4& p, const Vec4& x) {
  return p[0] * x[0] - p[1] * x[1] - p[2] * x[2] - p[3] * x[3];
}

inline cdouble minkowski_dot(const Vec4c& p, const Vec4c& x) {
  return p[0] * x[0] - p[1] * x[1] - p[2] * x[2] - p[3] * x[3];
}

}  // namespace dirac
