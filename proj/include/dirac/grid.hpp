#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "dirac/types.hpp"

namespace dirac {

/// Uniform symmetric lattice on [-extent, extent]^3: `cells` intervals per
/// axis (even, so 0 is a node), cells+1 points per axis including both
/// endpoints, spacing h = 2 extent / cells, quadrature weight h^3.
class Grid3 {
 public:
  Grid3() : Grid3(2, 1.0) {}
  Grid3(int cells, double extent) : cells_(cells), extent_(extent) {
    if (cells < 2 || cells % 2 != 0)
      throw std::invalid_argument("Grid3: cells must be even and >= 2");
    if (!(extent > 0))
      throw std::invalid_argument("Grid3: extent must be positive");
  }

  int cells() const { return cells_; }
  double extent() const { return extent_; }
  double spacing() const { return 2.0 * extent_ / cells_; }
  int points_per_axis() const { return cells_ + 1; }
  std::int64_t size() const {
    const std::int64_t p = points_per_axis();
    return p * p * p;
  }
  double cell_weight() const {
    const double h = spacing();
    return h * h * h;
  }

  double coord(int i) const { return -extent_ + i * spacing(); }

  std::array<int, 3> unflatten(std::int64_t idx) const {
    const int p = points_per_axis();
    return {static_cast<int>(idx / (static_cast<std::int64_t>(p) * p)),
            static_cast<int>((idx / p) % p), static_cast<int>(idx % p)};
  }
  std::int64_t flatten(int i, int j, int k) const {
    const std::int64_t p = points_per_axis();
    return (static_cast<std::int64_t>(i) * p + j) * p + k;
  }

  Vec3 node(std::int64_t idx) const {
    const auto ijk = unflatten(idx);
    return Vec3(coord(ijk[0]), coord(ijk[1]), coord(ijk[2]));
  }

  /// Nearest node index, or -1 if outside the lattice box.
  std::int64_t nearest(const Vec3& x) const {
    const double h = spacing();
    std::array<int, 3> ijk{};
    for (int a = 0; a < 3; ++a) {
      const double f = (x[a] + extent_) / h;
      const int i = static_cast<int>(std::lround(f));
      if (i < 0 || i >= points_per_axis()) return -1;
      ijk[a] = i;
    }
    return flatten(ijk[0], ijk[1], ijk[2]);
  }

  bool operator==(const Grid3& o) const {
    return cells_ == o.cells_ && extent_ == o.extent_;
  }

 private:
  int cells_;
  double extent_;
};

/// Momentum lattice paired to a position lattice so that the flat-surface
/// transform pair is exactly inverse-consistent: spacing
/// h_p = 2 pi / (points * h) makes the node-phase system orthogonal.
inline Grid3 momentum_grid_for(const Grid3& position) {
  const double hp = 2.0 * pi / (position.points_per_axis() * position.spacing());
  return Grid3(position.cells(), position.cells() / 2 * hp);
}

}  // namespace dirac
