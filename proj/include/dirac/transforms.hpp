#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "dirac/fields.hpp"

namespace dirac {

/// Kernel selection for the surface <-> shell quadratures. Auto uses the
/// separable path whenever the surface is graph-linear with at most one
/// tilted axis; Direct forces the reference O(N_x N_p) summation. Both give
/// the same sums up to re-association (<= 1e-10 relative).
enum class TransformPath { Auto, Direct, Separable };

/// F_3M: nodewise m (psi(p+) - psi(p-)) / E. Exact, no quadrature.
Momentum3Field momentum3_from_shell(const MassShellField& psi);

/// F_M3: nodewise (pslash + m) gamma^0 / (2m) on each sheet.
MassShellField shell_from_momentum3(const Momentum3Field& phi, double mass);

/// F_MSigma: shell samples of the surface datum,
/// (pslash+m)/(2m) (2pi)^{-3/2} sum_x e^{ipx} B(x) chi(x) h^3.
MassShellField shell_from_surface(const SurfaceField& chi, double mass,
                                  TransformPath path = TransformPath::Auto);

/// Analytic continuation of shell_from_surface to a complex shell point.
/// Throws std::domain_error when |Im pvec| * support diameter > 40.
Vec4c shell_from_surface_complex(const SurfaceField& chi,
                                 const ComplexShellPoint& pt);

/// F_0M evaluated at arbitrary spacetime points:
/// (2pi)^{-3/2}/m sum_{M} e^{-ipx} psi(p) (m^2/p^0) h_p^3.
std::vector<Vec4c> evaluate_solution(const MassShellField& psi,
                                     std::span<const Vec4> points);

/// Same sum for the lifted nodes of a surface grid (F_Sigma0 F_0M);
/// lattice-structured phases make this the fast route.
SurfaceField surface_from_shell(const MassShellField& psi,
                                const CauchySurface& target, const Grid3& grid,
                                TransformPath path = TransformPath::Auto);

/// Restriction of a spacetime evaluator to a lifted surface grid (F_Sigma0).
SurfaceField restrict_to_surface(const std::function<Vec4c(const Vec4&)>& eval,
                                 const CauchySurface& target, const Grid3& grid);

/// Subset evaluation used by the interaction term: values of F_0M psi at the
/// lifted nodes `indices` of `grid` on `surface`.
std::vector<Vec4c> evaluate_on_surface_nodes(const MassShellField& psi,
                                             const CauchySurface& surface,
                                             const Grid3& grid,
                                             std::span<const std::int64_t> indices);

/// Free evolution F_Sigma'Sigma = restrict . F_0M . F_MSigma.
SurfaceField free_evolve(const SurfaceField& chi, double mass,
                         const CauchySurface& target,
                         TransformPath path = TransformPath::Auto);

/// Free mass-shell phase e^{-i p^0 dt} per sheet (oracle for flat hops).
MassShellField phase_evolve(const MassShellField& psi, double dt);

struct PwSampleSpec {
  int samples = 1000;
  double re_sigma = 2.0;   // spread of Re pvec
  double im_cap = 2.0;     // |Im pvec| <= im_cap
  std::uint64_t seed = 2024;
};

/// Sampled sup over the complexified shell of
/// |p|^{n-1} e^{-alpha |Im pvec|} |Psi(p)|. Requires compact support and
/// alpha > sqrt(2) sup_{x in supp} |x| (throws otherwise).
double pw_norm_estimate(const SurfaceField& chi, double mass, double alpha,
                        int order, const PwSampleSpec& spec);

}  // namespace dirac
