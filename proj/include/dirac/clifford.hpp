#pragma once

#include <array>
#include <random>

#include "dirac/types.hpp"

namespace dirac {

/// Dirac matrices in the standard representation together with the
/// metric signature (+,-,-,-). All spinor algebra goes through this basis.
class GammaBasis {
 public:
  GammaBasis();

  const Mat4& gamma(int mu) const { return gamma_[mu]; }
  const std::array<Mat4, 4>& all() const { return gamma_; }
  /// gamma_mu with the index lowered: gamma_0 = gamma^0, gamma_k = -gamma^k.
  Mat4 gamma_lower(int mu) const { return metric(mu) * gamma_[mu]; }

  /// Max residual of {gamma^mu, gamma^nu} - 2 g^{mu nu} over all 16 pairs.
  double clifford_residual() const;

 private:
  std::array<Mat4, 4> gamma_;
};

const GammaBasis& gamma_standard();
inline const Mat4& gamma(int mu) { return gamma_standard().gamma(mu); }

/// Feynman slash: gamma^mu v_mu for a 4-vector given in upper components.
Mat4 slash(const Vec4c& v);
Mat4 slash(const Vec4& v);

/// Involutive unitary mapping the standard to the Weyl representation.
const Mat4& weyl_transfer();

struct SpinLorentzPair {
  Mat4 spinor;             // S
  Mat4d lorentz;           // Lambda, proper orthochronous
};

/// S(M), Lambda(M) for unimodular M. S = T^-1 blockdiag(M, (M*)^-1) T and
/// Lambda is extracted from Lambda^mu_nu = 1/4 tr(S^-1 gamma^mu S gamma_nu).
/// Throws std::invalid_argument when |det M - 1| > 1e-12.
SpinLorentzPair spin_from_sl2c(const Mat2& m);

/// SL(2,C) generators for tests and scenario transforms.
Mat2 sl2c_boost(double rapidity, int axis);
Mat2 sl2c_rotation(double angle, int axis);
Mat2 random_sl2c(std::mt19937_64& rng);

/// Residuals of the defining relations of a pair (test/check helper):
/// metric preservation, S* g0 S = g0, Lambda^mu_nu gamma^nu = S^-1 gamma^mu S.
double spin_pair_residual(const SpinLorentzPair& p);

}  // namespace dirac
