#pragma once

#include <random>
#include <vector>

#include "dirac/grid.hpp"
#include "dirac/mass_shell.hpp"
#include "dirac/surfaces.hpp"
#include "dirac/types.hpp"

namespace dirac {

/// C^4 samples on a momentum lattice (3-momentum representation).
struct Momentum3Field {
  Grid3 grid;
  std::vector<Vec4c> values;
};

/// C^4 samples on both sheets of the truncated mass shell, constrained to
/// the Dirac bundle at every node.
struct MassShellField {
  Grid3 grid;  // momentum lattice
  double mass = 1.0;
  std::vector<Vec4c> plus, minus;

  const std::vector<Vec4c>& sheet(int s) const { return s > 0 ? plus : minus; }
  std::vector<Vec4c>& sheet(int s) { return s > 0 ? plus : minus; }
};

/// C^4 samples on a position lattice lifted to a Cauchy surface. The
/// recorded support ball is used by quadrature restrictions and causal
/// bookkeeping; radius 0 means "unknown, assume the whole box".
struct SurfaceField {
  CauchySurface surface;
  Grid3 grid;  // position lattice
  std::vector<Vec4c> values;
  Vec3 support_center = Vec3::Zero();
  double support_radius = 0.0;

  bool has_support() const { return support_radius > 0.0; }
};

Momentum3Field zero_momentum3(const Grid3& grid);
MassShellField zero_shell(const Grid3& grid, double mass);
SurfaceField zero_surface(const CauchySurface& s, const Grid3& grid);

/// Per-node energies E(pvec) for a momentum lattice (cache helper).
std::vector<double> node_energies(const Grid3& grid, double mass);

// inner products (pairwise-deterministic reductions)
cdouble inner_m(const MassShellField& a, const MassShellField& b);
double norm_m(const MassShellField& a);
cdouble inner_3(const Momentum3Field& a, const Momentum3Field& b);
double norm_3(const Momentum3Field& a);
cdouble inner_sigma(const SurfaceField& a, const SurfaceField& b);
double norm_sigma(const SurfaceField& a);

/// Sobolev norm ||psi||_{M,n}: sum over 4d multi-indices |beta| <= n of
/// ||p^beta psi||^2 (lowered components as multipliers).
double sobolev_norm_m(const MassShellField& psi, int order);

/// Momentum-side derivative: multiplication by -i p_j (index lowered).
MassShellField derivative_m(const MassShellField& psi, int j);

/// Smooth compactly supported datum exp(-1/(1 - r^2/R^2)) u (peak e^-1).
SurfaceField bump_surface_field(const CauchySurface& s, const Grid3& grid,
                                const Vec3& center, double radius,
                                const Vec4c& spinor);

/// Gaussian-core datum exp(-theta s / (1-s)), s = r^2/R^2 (peak 1): same
/// support, much smaller spectral tail on coarse lattices.
SurfaceField gauss_bump_surface_field(const CauchySurface& s, const Grid3& grid,
                                      const Vec3& center, double radius,
                                      double theta, const Vec4c& spinor);

/// sup over nodes of sum_{|beta| <= n} |D^beta chi| with central differences
/// in the surface chart; out-of-grid samples count as zero. Requires n <= 4.
double sup_derivative_norm(const SurfaceField& chi, int order);

/// Worst relative Dirac-bundle violation max ||(slash(p)-m) psi|| / maxnorm.
double bundle_residual(const MassShellField& psi);

/// Nodewise projection P(p) onto the bundle; reports the largest correction.
MassShellField project_to_bundle(const MassShellField& psi,
                                 double* max_correction = nullptr);

/// Gaussian random section of the bundle (projected), for tests and checks.
MassShellField random_shell_field(const Grid3& grid, double mass,
                                  std::mt19937_64& rng);
Momentum3Field random_momentum3(const Grid3& grid, std::mt19937_64& rng);

/// Fraction of ||psi||^2 carried by nodes with |pvec| > cut.
double spectral_mass_outside(const MassShellField& psi, double cut);

/// Fraction of ||chi||^2 outside the ball |x - center| <= radius.
double mass_outside_ball(const SurfaceField& chi, const Vec3& center,
                         double radius);

}  // namespace dirac
