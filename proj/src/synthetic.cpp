#include "bmvc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bmvc/prng.hpp"

namespace bmvc {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

void fill_disk(Frame& f, double cx, double cy, double rad, double val) {
  const double r2 = rad * rad;
  const int i0 = std::max(0, static_cast<int>(cy - rad) - 1);
  const int i1 = std::min(f.height - 1, static_cast<int>(cy + rad) + 1);
  for (int i = i0; i <= i1; ++i)
    for (int j = 0; j < f.width; ++j) {
      const double dy = i - cy, dx = j - cx;
      if (dx * dx + dy * dy <= r2) f.at(i, j) = val;
    }
}

void fill_rect(Frame& f, int r0, int c0, int rh, int rw, double val) {
  const int r1 = std::min(f.height, r0 + rh), c1 = std::min(f.width, c0 + rw);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) f.at(i, j) = val;
}

}  // namespace

Frame synthetic_frame(int height, int width, std::uint64_t seed) {
  if (height < 1 || width < 1) throw GeometryError("synthetic: dimensions must be positive");
  Xoshiro256ss rng(seed);

  // Slow cosine background, then a handful of flat shapes: piecewise smooth
  // with crisp edges, the regime the TV prior models well.
  Frame f(height, width);
  const double fx = 0.5 + 1.5 * rng.next_unit();
  const double fy = 0.5 + 1.5 * rng.next_unit();
  const double phase = kTau * rng.next_unit();
  for (int i = 0; i < height; ++i)
    for (int j = 0; j < width; ++j)
      f.at(i, j) = 0.5 + 0.2 * std::cos(kTau * (fx * j / width + fy * i / height) + phase);

  const int disks = 3 + static_cast<int>(rng.next_below(3));
  for (int d = 0; d < disks; ++d) {
    const double cx = rng.next_unit() * width;
    const double cy = rng.next_unit() * height;
    const double rad = (0.08 + 0.17 * rng.next_unit()) * std::min(height, width);
    const double val = 0.1 + 0.8 * rng.next_unit();
    fill_disk(f, cx, cy, rad, val);
  }

  const int rects = 2 + static_cast<int>(rng.next_below(3));
  for (int d = 0; d < rects; ++d) {
    const int r0 = static_cast<int>(rng.next_unit() * height);
    const int c0 = static_cast<int>(rng.next_unit() * width);
    const int rh = 1 + static_cast<int>((0.08 + 0.25 * rng.next_unit()) * height);
    const int rw = 1 + static_cast<int>((0.08 + 0.25 * rng.next_unit()) * width);
    const double val = 0.1 + 0.8 * rng.next_unit();
    fill_rect(f, r0, c0, rh, rw, val);
  }

  for (double& v : f.data) v = std::clamp(v, 0.02, 0.98);
  return f;
}

ColorImage synthetic_color(int height, int width, std::uint64_t seed) {
  YuvPlanes yuv;
  yuv.y = synthetic_frame(height, width, seed);

  Xoshiro256ss rng(seed + 0x9E3779B97F4A7C15ull);
  yuv.u = Frame(height, width);
  yuv.v = Frame(height, width);
  for (Frame* plane : {&yuv.u, &yuv.v}) {
    const double fx = 0.3 + 0.9 * rng.next_unit();
    const double fy = 0.3 + 0.9 * rng.next_unit();
    const double phase = kTau * rng.next_unit();
    for (int i = 0; i < height; ++i)
      for (int j = 0; j < width; ++j)
        plane->at(i, j) = 0.5 + 0.18 * std::cos(kTau * (fx * j / width + fy * i / height) + phase);
  }

  ColorImage rgb = yuv_to_rgb(yuv);
  for (auto* ch : {&rgb.r, &rgb.g, &rgb.b})
    for (double& v : *ch) v = std::clamp(v, 0.0, 1.0);
  return rgb;
}

}  // namespace bmvc
