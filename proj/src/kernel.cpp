#include "dfbg/kernel.hpp"

#include <cmath>
#include <numbers>

#include "dfbg/gaussian.hpp"

namespace dfbg {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw ConfigError(std::string(what) + " must be positive and finite");
}

}  // namespace

void KernelConfig::validate() const {
  for (double v : bg_spatial_var) require_positive(v, "bg spatial variance");
  for (double v : bg_color_var) require_positive(v, "bg color variance");
  for (double v : fg_spatial_var) require_positive(v, "fg spatial variance");
  for (double v : fg_color_var) require_positive(v, "fg color variance");
}

std::array<int, 2> neighborhood_radius(const Vec2& spatial_var) {
  require_positive(spatial_var[0], "spatial variance");
  require_positive(spatial_var[1], "spatial variance");
  const int rx = std::max(1, static_cast<int>(std::ceil(3.0 * std::sqrt(spatial_var[0]))));
  const int ry = std::max(1, static_cast<int>(std::ceil(3.0 * std::sqrt(spatial_var[1]))));
  return {rx, ry};
}

SpatialWeightTable SpatialWeightTable::build(const Vec2& spatial_var) {
  const auto [rx, ry] = neighborhood_radius(spatial_var);
  SpatialWeightTable t;
  t.rx = rx;
  t.ry = ry;
  t.weights.resize(static_cast<std::size_t>(2 * ry + 1) * (2 * rx + 1));
  for (int dy = -ry; dy <= ry; ++dy)
    for (int dx = -rx; dx <= rx; ++dx) {
      const double d[2] = {static_cast<double>(dx), static_cast<double>(dy)};
      t.weights[static_cast<std::size_t>(dy + ry) * (2 * rx + 1) + (dx + rx)] =
          gaussian_pdf(d, spatial_var);
    }
  return t;
}

SpatialWeightTable SpatialWeightTable::build_center_only(const Vec2& spatial_var) {
  SpatialWeightTable t;
  t.rx = 0;
  t.ry = 0;
  const double d[2] = {0.0, 0.0};
  t.weights = {gaussian_pdf(d, spatial_var)};
  return t;
}

ColorKernel ColorKernel::build(const Vec3& color_var) {
  for (double v : color_var) require_positive(v, "color variance");
  ColorKernel k;
  k.inv2v0 = 1.0 / (2.0 * color_var[0]);
  k.inv2v1 = 1.0 / (2.0 * color_var[1]);
  k.inv2v2 = 1.0 / (2.0 * color_var[2]);
  const double two_pi = 2.0 * std::numbers::pi;
  k.norm = 1.0 / std::sqrt(two_pi * two_pi * two_pi * color_var[0] * color_var[1] * color_var[2]);
  return k;
}

}  // namespace dfbg
