#pragma once

#include <vector>

#include "bmvc/types.hpp"

namespace bmvc {

// Planar RGB in [0,1].
struct ColorImage {
  int height = 0;
  int width = 0;
  std::vector<double> r, g, b;

  ColorImage() = default;
  ColorImage(int h, int w)
      : height(h),
        width(w),
        r(static_cast<size_t>(h) * w, 0.0),
        g(static_cast<size_t>(h) * w, 0.0),
        b(static_cast<size_t>(h) * w, 0.0) {}
};

struct YuvPlanes {
  Frame y, u, v;  // chroma offset-binary: gray maps to u = v = 0.5
};

// BT.601 full-range, pinned coefficients; round trip is exact to float
// precision.
YuvPlanes rgb_to_yuv(const ColorImage& rgb);
ColorImage yuv_to_rgb(const YuvPlanes& yuv);

// Box-average decimation by `factor` (must divide both dims).
Frame chroma_down(const Frame& plane, int factor);

// Catmull-Rom bicubic interpolation back to factor * dims, sample positions
// aligned to pixel centers, border taps clamped.
Frame chroma_up(const Frame& plane, int factor);

}  // namespace bmvc
