#include "bmvc/color.hpp"

#include <algorithm>
#include <cmath>

namespace bmvc {

// BT.601 luma weights; chroma is offset-binary around 0.5 with the full-range
// scale factors 1/1.772 (U from B-Y) and 1/1.402 (V from R-Y).
namespace {
constexpr double kYr = 0.299, kYg = 0.587, kYb = 0.114;
constexpr double kUscale = 1.772, kVscale = 1.402;
}  // namespace

YuvPlanes rgb_to_yuv(const ColorImage& rgb) {
  const size_t n = static_cast<size_t>(rgb.height) * rgb.width;
  if (rgb.r.size() != n || rgb.g.size() != n || rgb.b.size() != n)
    throw DimensionError("rgb_to_yuv: plane sizes do not match dims");
  YuvPlanes out{Frame(rgb.height, rgb.width), Frame(rgb.height, rgb.width),
                Frame(rgb.height, rgb.width)};
  for (size_t i = 0; i < n; ++i) {
    const double y = kYr * rgb.r[i] + kYg * rgb.g[i] + kYb * rgb.b[i];
    out.y.data[i] = y;
    out.u.data[i] = (rgb.b[i] - y) / kUscale + 0.5;
    out.v.data[i] = (rgb.r[i] - y) / kVscale + 0.5;
  }
  return out;
}

ColorImage yuv_to_rgb(const YuvPlanes& yuv) {
  const int h = yuv.y.height, w = yuv.y.width;
  if (yuv.u.height != h || yuv.u.width != w || yuv.v.height != h || yuv.v.width != w)
    throw DimensionError("yuv_to_rgb: plane dims disagree");
  ColorImage out(h, w);
  for (size_t i = 0; i < yuv.y.size(); ++i) {
    const double y = yuv.y.data[i];
    const double r = y + kVscale * (yuv.v.data[i] - 0.5);
    const double b = y + kUscale * (yuv.u.data[i] - 0.5);
    out.r[i] = r;
    out.b[i] = b;
    out.g[i] = (y - kYr * r - kYb * b) / kYg;
  }
  return out;
}

Frame chroma_down(const Frame& plane, int factor) {
  if (factor < 1) throw GeometryError("chroma_down: factor must be >= 1");
  if (plane.height % factor != 0 || plane.width % factor != 0)
    throw GeometryError("chroma_down: factor does not divide plane dims");
  const int h = plane.height / factor, w = plane.width / factor;
  Frame out(h, w);
  const double norm = 1.0 / (static_cast<double>(factor) * factor);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) {
      double s = 0.0;
      for (int di = 0; di < factor; ++di)
        for (int dj = 0; dj < factor; ++dj) s += plane.at(i * factor + di, j * factor + dj);
      out.at(i, j) = s * norm;
    }
  return out;
}

namespace {

// Catmull-Rom weights for the four taps around fractional position t in [0,1).
void catrom_weights(double t, double w[4]) {
  const double t2 = t * t, t3 = t2 * t;
  w[0] = -0.5 * t3 + t2 - 0.5 * t;
  w[1] = 1.5 * t3 - 2.5 * t2 + 1.0;
  w[2] = -1.5 * t3 + 2.0 * t2 + 0.5 * t;
  w[3] = 0.5 * t3 - 0.5 * t2;
}

}  // namespace

Frame chroma_up(const Frame& plane, int factor) {
  if (factor < 1) throw GeometryError("chroma_up: factor must be >= 1");
  if (factor == 1) return plane;
  const int sh = plane.height, sw = plane.width;
  const int dh = sh * factor, dw = sw * factor;

  // Separable passes, source positions aligned to pixel centers, taps clamped
  // at the borders.
  Frame rows(sh, dw);
  for (int j = 0; j < dw; ++j) {
    const double sx = (j + 0.5) / factor - 0.5;
    const int base = static_cast<int>(std::floor(sx));
    double w[4];
    catrom_weights(sx - base, w);
    int tap[4];
    for (int k = 0; k < 4; ++k) tap[k] = std::clamp(base - 1 + k, 0, sw - 1);
    for (int i = 0; i < sh; ++i)
      rows.at(i, j) = w[0] * plane.at(i, tap[0]) + w[1] * plane.at(i, tap[1]) +
                      w[2] * plane.at(i, tap[2]) + w[3] * plane.at(i, tap[3]);
  }

  Frame out(dh, dw);
  for (int i = 0; i < dh; ++i) {
    const double sy = (i + 0.5) / factor - 0.5;
    const int base = static_cast<int>(std::floor(sy));
    double w[4];
    catrom_weights(sy - base, w);
    int tap[4];
    for (int k = 0; k < 4; ++k) tap[k] = std::clamp(base - 1 + k, 0, sh - 1);
    for (int j = 0; j < dw; ++j)
      out.at(i, j) = w[0] * rows.at(tap[0], j) + w[1] * rows.at(tap[1], j) +
                     w[2] * rows.at(tap[2], j) + w[3] * rows.at(tap[3], j);
  }
  return out;
}

}  // namespace bmvc
