#include "dirac/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac/clifford.hpp"
#include "dirac/parallel.hpp"

namespace dirac {

namespace {

void require_same(const Grid3& a, const Grid3& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

}  // namespace

Momentum3Field zero_momentum3(const Grid3& grid) {
  return {grid, std::vector<Vec4c>(grid.size(), Vec4c::Zero())};
}

MassShellField zero_shell(const Grid3& grid, double mass) {
  return {grid, mass, std::vector<Vec4c>(grid.size(), Vec4c::Zero()),
          std::vector<Vec4c>(grid.size(), Vec4c::Zero())};
}

SurfaceField zero_surface(const CauchySurface& s, const Grid3& grid) {
  SurfaceField f;
  f.surface = s;
  f.grid = grid;
  f.values.assign(grid.size(), Vec4c::Zero());
  return f;
}

std::vector<double> node_energies(const Grid3& grid, double mass) {
  std::vector<double> e(grid.size());
  for (std::int64_t i = 0; i < grid.size(); ++i)
    e[i] = energy(grid.node(i), mass);
  return e;
}

cdouble inner_m(const MassShellField& a, const MassShellField& b) {
  require_same(a.grid, b.grid, "inner_m");
  if (a.mass != b.mass) throw std::invalid_argument("inner_m: mass mismatch");
  const double m2 = a.mass * a.mass;
  const double w = a.grid.cell_weight();
  PairwiseAccumulator<cdouble> acc;
  for (std::int64_t i = 0; i < a.grid.size(); ++i) {
    const double e = energy(a.grid.node(i), a.mass);
    const double c = m2 / (e * e) * w;
    acc.add(c * (a.plus[i].dot(b.plus[i]) + a.minus[i].dot(b.minus[i])));
  }
  return acc.total();
}

double norm_m(const MassShellField& a) { return std::sqrt(std::abs(inner_m(a, a).real())); }

cdouble inner_3(const Momentum3Field& a, const Momentum3Field& b) {
  require_same(a.grid, b.grid, "inner_3");
  const double w = a.grid.cell_weight();
  PairwiseAccumulator<cdouble> acc;
  for (std::int64_t i = 0; i < a.grid.size(); ++i)
    acc.add(w * a.values[i].dot(b.values[i]));
  return acc.total();
}

double norm_3(const Momentum3Field& a) { return std::sqrt(std::abs(inner_3(a, a).real())); }

cdouble inner_sigma(const SurfaceField& a, const SurfaceField& b) {
  require_same(a.grid, b.grid, "inner_sigma");
  const double w = a.grid.cell_weight();
  PairwiseAccumulator<cdouble> acc;
  for (std::int64_t i = 0; i < a.grid.size(); ++i) {
    const Vec3 x = a.grid.node(i);
    const Mat4 form = gamma(0) * surface_form_matrix(a.surface, x);
    acc.add(w * a.values[i].dot(form * b.values[i]));
  }
  return acc.total();
}

double norm_sigma(const SurfaceField& a) {
  return std::sqrt(std::abs(inner_sigma(a, a).real()));
}

double sobolev_norm_m(const MassShellField& psi, int order) {
  if (order < 0) throw std::invalid_argument("sobolev_norm_m: order < 0");
  const double w = psi.grid.cell_weight();
  const double m2 = psi.mass * psi.mass;
  PairwiseAccumulator<double> acc;
  for (std::int64_t i = 0; i < psi.grid.size(); ++i) {
    const Vec3 pv = psi.grid.node(i);
    const double e = energy(pv, psi.mass);
    // sum over multi-indices of |p^beta|^2; signs of lowered components
    // drop out, so accumulate the scalar weight directly
    double multiplier = 0.0;
    for (int b0 = 0; b0 <= order; ++b0)
      for (int b1 = 0; b0 + b1 <= order; ++b1)
        for (int b2 = 0; b0 + b1 + b2 <= order; ++b2)
          for (int b3 = 0; b0 + b1 + b2 + b3 <= order; ++b3)
            multiplier += std::pow(e * e, b0) * std::pow(pv[0] * pv[0], b1)
                          * std::pow(pv[1] * pv[1], b2)
                          * std::pow(pv[2] * pv[2], b3);
    const double c = m2 / (e * e) * w * multiplier;
    acc.add(c * (psi.plus[i].squaredNorm() + psi.minus[i].squaredNorm()));
  }
  return std::sqrt(acc.total());
}

MassShellField derivative_m(const MassShellField& psi, int j) {
  if (j < 0 || j > 3) throw std::invalid_argument("derivative_m: index");
  MassShellField out = psi;
  for (std::int64_t i = 0; i < psi.grid.size(); ++i) {
    const Vec3 pv = psi.grid.node(i);
    const double e = energy(pv, psi.mass);
    // lowered components: p_0 = p^0, p_k = -p^k
    const double plus_pj = (j == 0) ? e : -pv[j - 1];
    const double minus_pj = (j == 0) ? -e : -pv[j - 1];
    out.plus[i] = cdouble(0, -1) * plus_pj * psi.plus[i];
    out.minus[i] = cdouble(0, -1) * minus_pj * psi.minus[i];
  }
  return out;
}

namespace {

SurfaceField profiled_field(const CauchySurface& s, const Grid3& grid,
                            const Vec3& center, double radius,
                            const Vec4c& spinor,
                            const std::function<double(double)>& profile) {
  if (!(radius > 0)) throw std::invalid_argument("bump field: radius <= 0");
  if ((center.cwiseAbs().maxCoeff() + radius) > grid.extent() + 1e-12)
    throw std::invalid_argument("bump field: support exceeds grid box");
  SurfaceField f = zero_surface(s, grid);
  for (std::int64_t i = 0; i < grid.size(); ++i) {
    const double s2 = (grid.node(i) - center).squaredNorm() / (radius * radius);
    if (s2 < 1.0) f.values[i] = profile(s2) * spinor;
  }
  f.support_center = center;
  f.support_radius = radius;
  return f;
}

}  // namespace

SurfaceField bump_surface_field(const CauchySurface& s, const Grid3& grid,
                                const Vec3& center, double radius,
                                const Vec4c& spinor) {
  return profiled_field(s, grid, center, radius, spinor,
                        [](double s2) { return std::exp(-1.0 / (1.0 - s2)); });
}

SurfaceField gauss_bump_surface_field(const CauchySurface& s, const Grid3& grid,
                                      const Vec3& center, double radius,
                                      double theta, const Vec4c& spinor) {
  return profiled_field(s, grid, center, radius, spinor, [theta](double s2) {
    return std::exp(-theta * s2 / (1.0 - s2));
  });
}

double sup_derivative_norm(const SurfaceField& chi, int order) {
  if (order < 0 || order > 4)
    throw std::invalid_argument("sup_derivative_norm: order must be 0..4");
  const Grid3& g = chi.grid;
  const int p = g.points_per_axis();
  const double h = g.spacing();

  auto value = [&](int i, int j, int k) -> Vec4c {
    if (i < 0 || j < 0 || k < 0 || i >= p || j >= p || k >= p)
      return Vec4c::Zero();
    return chi.values[g.flatten(i, j, k)];
  };

  // D^beta via iterated central differences
  std::function<Vec4c(int, int, int, std::array<int, 3>)> diff =
      [&](int i, int j, int k, std::array<int, 3> beta) -> Vec4c {
    for (int a = 0; a < 3; ++a) {
      if (beta[a] > 0) {
        auto lower = beta;
        --lower[a];
        const int di = (a == 0), dj = (a == 1), dk = (a == 2);
        return (diff(i + di, j + dj, k + dk, lower)
                - diff(i - di, j - dj, k - dk, lower)) / (2.0 * h);
      }
    }
    return value(i, j, k);
  };

  double sup = 0.0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) {
        double total = 0.0;
        for (int b1 = 0; b1 <= order; ++b1)
          for (int b2 = 0; b1 + b2 <= order; ++b2)
            for (int b3 = 0; b1 + b2 + b3 <= order; ++b3)
              total += diff(i, j, k, {b1, b2, b3}).norm();
        sup = std::max(sup, total);
      }
  return sup;
}

double bundle_residual(const MassShellField& psi) {
  double max_norm = 0.0;
  for (std::int64_t i = 0; i < psi.grid.size(); ++i)
    max_norm = std::max({max_norm, psi.plus[i].norm(), psi.minus[i].norm()});
  if (max_norm == 0.0) return 0.0;
  double worst = 0.0;
  for (std::int64_t i = 0; i < psi.grid.size(); ++i) {
    const Vec3 pv = psi.grid.node(i);
    for (int s : {+1, -1}) {
      const OnShellMomentum p{s, pv, psi.mass};
      const Mat4 d = slash(p.p4()) - psi.mass * Mat4::Identity();
      const Vec4c& v = (s > 0) ? psi.plus[i] : psi.minus[i];
      worst = std::max(worst, (d * v).norm());
    }
  }
  return worst / max_norm;
}

MassShellField project_to_bundle(const MassShellField& psi, double* max_correction) {
  MassShellField out = psi;
  double worst = 0.0;
  for (std::int64_t i = 0; i < psi.grid.size(); ++i) {
    const Vec3 pv = psi.grid.node(i);
    for (int s : {+1, -1}) {
      const Mat4 proj = bundle_projector({s, pv, psi.mass});
      Vec4c& v = out.sheet(s)[i];
      const Vec4c w = proj * v;
      worst = std::max(worst, (w - v).norm());
      v = w;
    }
  }
  if (max_correction) *max_correction = worst;
  return out;
}

MassShellField random_shell_field(const Grid3& grid, double mass,
                                  std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  MassShellField f = zero_shell(grid, mass);
  for (std::int64_t i = 0; i < grid.size(); ++i) {
    for (int c = 0; c < 4; ++c) {
      f.plus[i][c] = cdouble(n(rng), n(rng));
      f.minus[i][c] = cdouble(n(rng), n(rng));
    }
  }
  return project_to_bundle(f);
}

Momentum3Field random_momentum3(const Grid3& grid, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Momentum3Field f = zero_momentum3(grid);
  for (auto& v : f.values)
    for (int c = 0; c < 4; ++c) v[c] = cdouble(n(rng), n(rng));
  return f;
}

double spectral_mass_outside(const MassShellField& psi, double cut) {
  const double m2 = psi.mass * psi.mass;
  const double w = psi.grid.cell_weight();
  PairwiseAccumulator<double> out, tot;
  for (std::int64_t i = 0; i < psi.grid.size(); ++i) {
    const Vec3 pv = psi.grid.node(i);
    const double e = energy(pv, psi.mass);
    const double c = m2 / (e * e) * w;
    const double d = c * (psi.plus[i].squaredNorm() + psi.minus[i].squaredNorm());
    tot.add(d);
    if (pv.norm() > cut) out.add(d);
  }
  const double t = tot.total();
  return t > 0 ? out.total() / t : 0.0;
}

double mass_outside_ball(const SurfaceField& chi, const Vec3& center,
                         double radius) {
  PairwiseAccumulator<double> out, tot;
  for (std::int64_t i = 0; i < chi.grid.size(); ++i) {
    const double d = chi.values[i].squaredNorm();
    tot.add(d);
    if ((chi.grid.node(i) - center).norm() > radius) out.add(d);
  }
  const double t = tot.total();
  return t > 0 ? out.total() / t : 0.0;
}

}  // namespace dirac
