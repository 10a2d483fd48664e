#include "dirac/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac/clifford.hpp"
#include "dirac/parallel.hpp"

namespace dirac {

namespace {

constexpr double two_pi_pow = 15.749609945722419;  // (2 pi)^{3/2}

Mat4 shell_prefactor(double p0, const Vec3& pvec, double mass) {
  Vec4 p(p0, pvec[0], pvec[1], pvec[2]);
  return (slash(p) + mass * Mat4::Identity()) / (2.0 * mass);
}

/// Per-sheet coefficient of the F_0M sum: (1/m)(m^2/p^0) h_p^3 (2pi)^{-3/2}.
/// Negative on the lower sheet (signed invariant measure).
double f0m_coeff(double mass, double p0, double wp) {
  return mass * mass / p0 * wp / mass / two_pi_pow;
}

struct SupportNode {
  std::int64_t idx;
  std::array<int, 3> ijk;
  Vec3 x;
  double t;        // lifted time
  Vec4c theta;     // B(x) chi(x) h^3
};

std::vector<SupportNode> gather_support(const SurfaceField& chi) {
  std::vector<SupportNode> out;
  const double h3 = chi.grid.cell_weight();
  for (std::int64_t i = 0; i < chi.grid.size(); ++i) {
    if (chi.values[i].isZero(0.0)) continue;
    SupportNode n;
    n.idx = i;
    n.ijk = chi.grid.unflatten(i);
    n.x = chi.grid.node(i);
    n.t = chi.surface.height(n.x);
    n.theta = surface_form_matrix(chi.surface, n.x) * chi.values[i] * h3;
    out.push_back(n);
  }
  return out;
}

/// Table of e^{sign i a_i b_j} over an axis pair of lattices.
std::vector<cdouble> phase_table(const Grid3& rows, const Grid3& cols, double sign) {
  const int mr = rows.points_per_axis(), mc = cols.points_per_axis();
  std::vector<cdouble> t(static_cast<std::size_t>(mr) * mc);
  for (int i = 0; i < mr; ++i)
    for (int j = 0; j < mc; ++j)
      t[static_cast<std::size_t>(i) * mc + j] =
          std::polar(1.0, sign * rows.coord(i) * cols.coord(j));
  return t;
}

int tilted_axis(const CauchySurface& s) {
  // -1: no tilted axis; 0..2: exactly one; -2: more than one
  int axis = -1;
  for (int a = 0; a < 3; ++a)
    if (s.slope[a] != 0.0) axis = (axis == -1) ? a : -2;
  return axis;
}

/// In-place partial transform along `axis` of a Vec4c lattice:
/// out[k] = sum_j e^{sign i dual.coord(k) prim.coord(j)} in[j].
void partial_dft(std::vector<Vec4c>& data, const Grid3& prim, const Grid3& dual,
                 int axis, double sign) {
  const int m = prim.points_per_axis();
  const auto table = phase_table(dual, prim, sign);
  const std::int64_t m64 = m;
  const std::int64_t stride[3] = {m64 * m64, m64, 1};
  const std::int64_t s_axis = stride[axis];
  const int a1 = (axis == 0) ? 1 : 0;
  const int a2 = (axis == 2) ? 1 : 2;
  parallel_for(m64 * m64, [&](std::int64_t o) {
    const std::int64_t i1 = o / m, i2 = o % m;
    const std::int64_t base = i1 * stride[a1] + i2 * stride[a2];
    std::vector<Vec4c> line(m);
    for (int k = 0; k < m; ++k) {
      Vec4c acc = Vec4c::Zero();
      const cdouble* row = table.data() + static_cast<std::size_t>(k) * m;
      for (int j = 0; j < m; ++j) acc += row[j] * data[base + j * s_axis];
      line[k] = acc;
    }
    for (int k = 0; k < m; ++k) data[base + k * s_axis] = line[k];
  });
}

}  // namespace

Momentum3Field momentum3_from_shell(const MassShellField& psi) {
  Momentum3Field out = zero_momentum3(psi.grid);
  for (std::int64_t i = 0; i < psi.grid.size(); ++i) {
    const double e = energy(psi.grid.node(i), psi.mass);
    out.values[i] = psi.mass * (psi.plus[i] - psi.minus[i]) / e;
  }
  return out;
}

MassShellField shell_from_momentum3(const Momentum3Field& phi, double mass) {
  MassShellField out = zero_shell(phi.grid, mass);
  for (std::int64_t i = 0; i < phi.grid.size(); ++i) {
    const Vec3 pv = phi.grid.node(i);
    const double e = energy(pv, mass);
    const Vec4c g0phi = gamma(0) * phi.values[i];
    out.plus[i] = shell_prefactor(e, pv, mass) * g0phi;
    out.minus[i] = shell_prefactor(-e, pv, mass) * g0phi;
  }
  return out;
}

MassShellField shell_from_surface(const SurfaceField& chi, double mass,
                                  TransformPath path) {
  const Grid3& xg = chi.grid;
  const Grid3 pg = momentum_grid_for(xg);
  MassShellField out = zero_shell(pg, mass);
  const int m = xg.points_per_axis();
  const int axisA = tilted_axis(chi.surface);
  const bool separable = (path != TransformPath::Direct) && chi.surface.linear
                         && axisA != -2;

  if (separable) {
    const Mat4 form = surface_form_matrix(chi.surface, Vec3::Zero());
    const double h3 = xg.cell_weight();
    std::vector<Vec4c> work(xg.size());
    for (std::int64_t i = 0; i < xg.size(); ++i)
      work[i] = form * chi.values[i] * h3;
    for (int a = 0; a < 3; ++a)
      if (a != axisA) partial_dft(work, xg, pg, a, -1.0);

    const double c0 = chi.surface.offset;
    const double slope = (axisA >= 0) ? chi.surface.slope[axisA] : 0.0;
    const std::int64_t st[3] = {static_cast<std::int64_t>(m) * m, m, 1};
    parallel_for(pg.size(), [&](std::int64_t n) {
      const auto ijk = pg.unflatten(n);
      const Vec3 pv = pg.node(n);
      const double e = energy(pv, mass);
      for (int s : {+1, -1}) {
        const double p0 = s * e;
        Vec4c acc;
        if (axisA < 0) {
          acc = work[n];
        } else {
          acc = Vec4c::Zero();
          std::int64_t base = 0;
          for (int a = 0; a < 3; ++a)
            if (a != axisA) base += static_cast<std::int64_t>(ijk[a]) * st[a];
          const double q = pv[axisA] - p0 * slope;
          for (int j = 0; j < m; ++j)
            acc += std::polar(1.0, -q * xg.coord(j)) * work[base + j * st[axisA]];
        }
        acc *= std::polar(1.0 / two_pi_pow, p0 * c0);
        out.sheet(s)[n] = shell_prefactor(p0, pv, mass) * acc;
      }
    });
    return out;
  }

  const auto supp = gather_support(chi);
  if (supp.empty()) return out;
  const auto table = phase_table(pg, xg, -1.0);  // axes share one lattice pair

  parallel_for(pg.size(), [&](std::int64_t n) {
    const auto pijk = pg.unflatten(n);
    const Vec3 pv = pg.node(n);
    const double e = energy(pv, mass);
    PairwiseAccumulator<Vec4c> acc_p, acc_m;
    for (const auto& nd : supp) {
      const cdouble v = table[static_cast<std::size_t>(pijk[0]) * m + nd.ijk[0]]
                      * table[static_cast<std::size_t>(pijk[1]) * m + nd.ijk[1]]
                      * table[static_cast<std::size_t>(pijk[2]) * m + nd.ijk[2]];
      const cdouble u = std::polar(1.0, e * nd.t);  // e^{i E t_x}
      acc_p.add(Vec4c((u * v) * nd.theta));
      acc_m.add(Vec4c((std::conj(u) * v) * nd.theta));
    }
    out.plus[n] = shell_prefactor(e, pv, mass) * acc_p.total() / two_pi_pow;
    out.minus[n] = shell_prefactor(-e, pv, mass) * acc_m.total() / two_pi_pow;
  });
  return out;
}

Vec4c shell_from_surface_complex(const SurfaceField& chi,
                                 const ComplexShellPoint& pt) {
  const double diam = chi.has_support() ? 2.0 * chi.support_radius
                                        : 2.0 * std::sqrt(3.0) * chi.grid.extent();
  if (im_norm(pt.pvec) * diam > 40.0)
    throw std::domain_error("shell_from_surface_complex: |Im pvec| out of range");

  const auto supp = gather_support(chi);
  PairwiseAccumulator<Vec4c> acc;
  for (const auto& nd : supp) {
    const cdouble px = pt.p0 * nd.t
                       - (pt.pvec[0] * nd.x[0] + pt.pvec[1] * nd.x[1]
                          + pt.pvec[2] * nd.x[2]);
    acc.add(Vec4c(std::exp(cdouble(0, 1) * px) * nd.theta));
  }
  const Mat4 pref =
      (slash(pt.p4()) + pt.mass * Mat4::Identity()) / (2.0 * pt.mass);
  return pref * acc.total() / two_pi_pow;
}

std::vector<Vec4c> evaluate_solution(const MassShellField& psi,
                                     std::span<const Vec4> points) {
  const Grid3& pg = psi.grid;
  const double wp = pg.cell_weight();
  std::vector<Vec4c> out(points.size(), Vec4c::Zero());
  parallel_for(static_cast<std::int64_t>(points.size()), [&](std::int64_t k) {
    const Vec4& x = points[k];
    PairwiseAccumulator<Vec4c> acc;
    for (std::int64_t n = 0; n < pg.size(); ++n) {
      const Vec3 pv = pg.node(n);
      const double e = energy(pv, psi.mass);
      const cdouble u0 = std::polar(1.0, -e * x[0]);
      const cdouble vs = std::polar(1.0, pv[0] * x[1] + pv[1] * x[2] + pv[2] * x[3]);
      acc.add(Vec4c((u0 * vs) * (f0m_coeff(psi.mass, e, wp) * psi.plus[n])
                    + (std::conj(u0) * vs)
                      * (f0m_coeff(psi.mass, -e, wp) * psi.minus[n])));
    }
    out[k] = acc.total();
  });
  return out;
}

std::vector<Vec4c> evaluate_on_surface_nodes(const MassShellField& psi,
                                             const CauchySurface& surface,
                                             const Grid3& grid,
                                             std::span<const std::int64_t> indices) {
  const Grid3& pg = psi.grid;
  const int mc = grid.points_per_axis();
  const double wp = pg.cell_weight();
  const auto table = phase_table(pg, grid, +1.0);

  std::vector<Vec4c> out(indices.size(), Vec4c::Zero());
  parallel_for(static_cast<std::int64_t>(indices.size()), [&](std::int64_t k) {
    const auto ijk = grid.unflatten(indices[k]);
    const Vec3 x = grid.node(indices[k]);
    const double t = surface.height(x);
    PairwiseAccumulator<Vec4c> acc;
    for (std::int64_t n = 0; n < pg.size(); ++n) {
      const auto pijk = pg.unflatten(n);
      const double e = energy(pg.node(n), psi.mass);
      const cdouble v = table[static_cast<std::size_t>(pijk[0]) * mc + ijk[0]]
                      * table[static_cast<std::size_t>(pijk[1]) * mc + ijk[1]]
                      * table[static_cast<std::size_t>(pijk[2]) * mc + ijk[2]];
      const cdouble u = std::polar(1.0, -e * t);
      acc.add(Vec4c((u * v) * (f0m_coeff(psi.mass, e, wp) * psi.plus[n])
                    + (std::conj(u) * v)
                      * (f0m_coeff(psi.mass, -e, wp) * psi.minus[n])));
    }
    out[k] = acc.total();
  });
  return out;
}

SurfaceField surface_from_shell(const MassShellField& psi,
                                const CauchySurface& target, const Grid3& grid,
                                TransformPath path) {
  if (!(momentum_grid_for(grid) == psi.grid))
    throw std::invalid_argument(
        "surface_from_shell: momentum lattice is not the calibrated partner "
        "of the position lattice");
  SurfaceField out = zero_surface(target, grid);
  const int m = grid.points_per_axis();
  const Grid3& pg = psi.grid;
  const double wp = pg.cell_weight();
  const int axisA = tilted_axis(target);
  const bool separable = (path != TransformPath::Direct) && target.linear
                         && axisA != -2;

  if (separable) {
    const double c0 = target.offset;
    const double slope = (axisA >= 0) ? target.slope[axisA] : 0.0;
    const std::int64_t st[3] = {static_cast<std::int64_t>(m) * m, m, 1};
    std::vector<Vec4c> work(grid.size(), Vec4c::Zero());
    if (axisA < 0) {
      for (std::int64_t n = 0; n < pg.size(); ++n) {
        const double e = energy(pg.node(n), psi.mass);
        work[n] = (std::polar(1.0, -e * c0) * f0m_coeff(psi.mass, e, wp)) * psi.plus[n]
                + (std::polar(1.0, e * c0) * f0m_coeff(psi.mass, -e, wp)) * psi.minus[n];
      }
    } else {
      // fold the tilted-axis phases and the e^{-i p0 c0} factor while the
      // full momentum index is still available
      const int aF1 = (axisA == 0) ? 1 : 0;
      const int aF2 = (axisA == 2) ? 1 : 2;
      parallel_for(static_cast<std::int64_t>(m) * m, [&](std::int64_t o) {
        const std::int64_t base = (o / m) * st[aF1] + (o % m) * st[aF2];
        for (int jp = 0; jp < m; ++jp) {
          const std::int64_t n = base + jp * st[axisA];
          const Vec3 pv = pg.node(n);
          const double e = energy(pv, psi.mass);
          for (int s : {+1, -1}) {
            const double p0 = s * e;
            const double q = pv[axisA] - p0 * slope;
            const Vec4c c = (std::polar(1.0, -p0 * c0)
                             * f0m_coeff(psi.mass, p0, wp)) * psi.sheet(s)[n];
            for (int jy = 0; jy < m; ++jy)
              work[base + jy * st[axisA]] +=
                  std::polar(1.0, q * grid.coord(jy)) * c;
          }
        }
      });
    }
    for (int a = 0; a < 3; ++a)
      if (a != axisA) partial_dft(work, pg, grid, a, +1.0);
    out.values = std::move(work);
    return out;
  }

  std::vector<std::int64_t> all(grid.size());
  for (std::int64_t i = 0; i < grid.size(); ++i) all[i] = i;
  out.values = evaluate_on_surface_nodes(psi, target, grid, all);
  return out;
}

SurfaceField restrict_to_surface(const std::function<Vec4c(const Vec4&)>& eval,
                                 const CauchySurface& target, const Grid3& grid) {
  SurfaceField out = zero_surface(target, grid);
  for (std::int64_t i = 0; i < grid.size(); ++i)
    out.values[i] = eval(target.lift(grid.node(i)));
  return out;
}

SurfaceField free_evolve(const SurfaceField& chi, double mass,
                         const CauchySurface& target, TransformPath path) {
  const MassShellField psi = shell_from_surface(chi, mass, path);
  SurfaceField out = surface_from_shell(psi, target, chi.grid, path);
  if (chi.has_support()) {
    // causal bookkeeping: support can spread at most by the height offset
    double dmax = 0.0;
    for (std::int64_t i = 0; i < chi.grid.size(); ++i) {
      const Vec3 x = chi.grid.node(i);
      dmax = std::max(dmax, std::abs(target.height(x) - chi.surface.height(x)));
    }
    const double r = chi.support_radius + dmax;
    if (r < chi.grid.extent()) {
      out.support_center = chi.support_center;
      out.support_radius = r;
    }
  }
  return out;
}

MassShellField phase_evolve(const MassShellField& psi, double dt) {
  MassShellField out = psi;
  for (std::int64_t i = 0; i < psi.grid.size(); ++i) {
    const double e = energy(psi.grid.node(i), psi.mass);
    out.plus[i] = std::polar(1.0, -e * dt) * psi.plus[i];
    out.minus[i] = std::polar(1.0, e * dt) * psi.minus[i];
  }
  return out;
}

double pw_norm_estimate(const SurfaceField& chi, double mass, double alpha,
                        int order, const PwSampleSpec& spec) {
  if (!chi.has_support())
    throw std::invalid_argument("pw_norm_estimate: field needs recorded support");
  double sup_x = 0.0;
  for (std::int64_t i = 0; i < chi.grid.size(); ++i) {
    if (chi.values[i].isZero(0.0)) continue;
    sup_x = std::max(sup_x, chi.surface.lift(chi.grid.node(i)).norm());
  }
  if (!(alpha > std::sqrt(2.0) * sup_x))
    throw std::invalid_argument("pw_norm_estimate: alpha below PW hypothesis");

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double sup = 0.0;
  for (int k = 0; k < spec.samples; ++k) {
    Vec3 re(gauss(rng), gauss(rng), gauss(rng));
    re *= spec.re_sigma;
    Vec3 dir(gauss(rng), gauss(rng), gauss(rng));
    if (dir.norm() < 1e-12) dir = Vec3(1, 0, 0);
    dir.normalize();
    const double r = spec.im_cap * unif(rng);
    Vec3c pv;
    for (int a = 0; a < 3; ++a) pv[a] = cdouble(re[a], r * dir[a]);
    const ComplexShellPoint pt = complex_lift(pv, (k % 2 == 0) ? +1 : -1, mass);
    const Vec4c val = shell_from_surface_complex(chi, pt);
    const double weight = std::pow(pt.p4().norm(), order - 1)
                          * std::exp(-alpha * im_norm(pt.pvec));
    sup = std::max(sup, weight * val.norm());
  }
  return sup;
}

}  // namespace dirac
