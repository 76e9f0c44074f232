#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "dfbg/raster.hpp"

namespace dfbg {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

// Diagonal spatial/color covariance entries for the background and
// foreground models. Entries are variances (sigma^2), not standard
// deviations; see the config notes in the README.
struct KernelConfig {
  Vec2 bg_spatial_var{3.0 / 4.0, 3.0 / 4.0};
  Vec3 bg_color_var{45.0 / 4.0, 45.0 / 4.0, 45.0 / 4.0};
  Vec2 fg_spatial_var{12.0 / 4.0, 12.0 / 4.0};
  Vec3 fg_color_var{45.0 / 4.0, 45.0 / 4.0, 45.0 / 4.0};

  void validate() const;  // throws ConfigError on non-positive entries
};

// Neighborhood half-extent covering >= 99.7% of the kernel mass per axis:
// max(1, ceil(3 * sigma)).
std::array<int, 2> neighborhood_radius(const Vec2& spatial_var);

// Precomputed G(delta; 0, Sigma_S) over the truncated neighborhood grid.
// Center weight is the table maximum; table is symmetric in delta -> -delta.
struct SpatialWeightTable {
  int rx = 0;
  int ry = 0;
  std::vector<double> weights;  // (2*ry+1) rows of (2*rx+1)

  double at(int dx, int dy) const {
    return weights[static_cast<std::size_t>(dy + ry) * (2 * rx + 1) + (dx + rx)];
  }

  static SpatialWeightTable build(const Vec2& spatial_var);
  // Radius-0 table (center tap only); selects the pixelwise model in which
  // the likelihood at x depends only on history at x.
  static SpatialWeightTable build_center_only(const Vec2& spatial_var);
};

// Precomputed diagonal 3-D Gaussian for color offsets.
struct ColorKernel {
  double inv2v0 = 0.0, inv2v1 = 0.0, inv2v2 = 0.0;
  double norm = 0.0;

  static ColorKernel build(const Vec3& color_var);

  double operator()(const Color& a, const Color& b) const {
    const double d0 = a.c0 - b.c0;
    const double d1 = a.c1 - b.c1;
    const double d2 = a.c2 - b.c2;
    return norm * std::exp(-(d0 * d0 * inv2v0 + d1 * d1 * inv2v1 + d2 * d2 * inv2v2));
  }
};

}  // namespace dfbg
