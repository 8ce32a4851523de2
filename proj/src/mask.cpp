#include "bmvc/mask.hpp"

#include <algorithm>

#include "bmvc/prng.hpp"

namespace bmvc {

MaskPlane generate_mask(std::uint64_t seed, int height, int width) {
  if (height < 1 || width < 1) throw GeometryError("mask: dimensions must be positive");
  MaskPlane m;
  m.height = height;
  m.width = width;
  m.seed = seed;
  m.bits.resize(static_cast<size_t>(height) * width);
  Xoshiro256ss rng(seed);
  for (auto& bit : m.bits) bit = static_cast<std::uint8_t>(rng.next_bit());
  return m;
}

MaskLut build_lut(const MaskPlane& mask, const BlockGeometry& geom) {
  if (mask.height != geom.frame_h || mask.width != geom.frame_w)
    throw DimensionError("lut: mask dims do not match geometry");

  MaskLut lut;
  lut.block_h = geom.block_h;
  lut.block_w = geom.block_w;
  const int pixels = geom.block_pixels();
  lut.start.resize(pixels + 1, 0);
  lut.r.resize(pixels, 0);
  lut.blocks.reserve(mask.bits.size() / 2);

  // Iterating blocks in ascending order keeps each list sorted for free.
  for (int i = 0; i < pixels; ++i) {
    lut.start[i] = static_cast<std::int32_t>(lut.blocks.size());
    for (int b = 0; b < geom.block_count; ++b)
      if (mask.bits[frame_index(geom, b, i)]) lut.blocks.push_back(b);
    lut.r[i] = static_cast<std::int32_t>(lut.blocks.size()) - lut.start[i];
  }
  lut.start[pixels] = static_cast<std::int32_t>(lut.blocks.size());
  lut.max_r = pixels ? *std::max_element(lut.r.begin(), lut.r.end()) : 0;
  lut.has_zero_r = std::find(lut.r.begin(), lut.r.end(), 0) != lut.r.end();
  return lut;
}

}  // namespace bmvc
