#pragma once

#include "dfbg/raster.hpp"

namespace dfbg {

enum class ColorSpaceKind { Rgb, Lab };

// Declared extent of the feature space. The uniform (unseen-foreground)
// density is 1 / volume(); the pipeline only requires that the same volume
// is used for every frame of a run.
struct ColorSpace {
  ColorSpaceKind kind = ColorSpaceKind::Rgb;

  // 8-bit RGB: 256^3 representable colors. LAB: declared volume
  // 100 * 255 * 255 (L in [0,100], a/b spanning 255 units each).
  double volume() const;
};

// sRGB [0,255] -> CIE LAB under the D65 white point.
Color rgb_to_lab(const Color& rgb);
Frame rgb_to_lab(const Frame& frame);

}  // namespace dfbg
