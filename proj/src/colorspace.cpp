#include "dfbg/colorspace.hpp"

#include <cmath>

namespace dfbg {

double ColorSpace::volume() const {
  switch (kind) {
    case ColorSpaceKind::Rgb:
      return 256.0 * 256.0 * 256.0;
    case ColorSpaceKind::Lab:
      return 100.0 * 255.0 * 255.0;
  }
  return 256.0 * 256.0 * 256.0;
}

namespace {

// D65 reference white in the sRGB-to-XYZ matrix convention.
constexpr double kXn = 0.95047;
constexpr double kYn = 1.0;
constexpr double kZn = 1.08883;

double srgb_to_linear(double s) {
  return s <= 0.04045 ? s / 12.92 : std::pow((s + 0.055) / 1.055, 2.4);
}

double lab_f(double t) {
  constexpr double delta = 6.0 / 29.0;
  constexpr double delta3 = delta * delta * delta;
  return t > delta3 ? std::cbrt(t) : t / (3.0 * delta * delta) + 4.0 / 29.0;
}

}  // namespace

Color rgb_to_lab(const Color& rgb) {
  const double r = srgb_to_linear(rgb.c0 / 255.0);
  const double g = srgb_to_linear(rgb.c1 / 255.0);
  const double b = srgb_to_linear(rgb.c2 / 255.0);

  const double x = 0.4124564 * r + 0.3575761 * g + 0.1804375 * b;
  const double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
  const double z = 0.0193339 * r + 0.1191920 * g + 0.9503041 * b;

  const double fx = lab_f(x / kXn);
  const double fy = lab_f(y / kYn);
  const double fz = lab_f(z / kZn);

  return Color{116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

Frame rgb_to_lab(const Frame& frame) {
  Frame out(frame.width(), frame.height());
  for (std::size_t i = 0; i < frame.size(); ++i) out[i] = rgb_to_lab(frame[i]);
  return out;
}

}  // namespace dfbg
