#pragma once

#include <cstdint>
#include <vector>

#include "bmvc/mask.hpp"
#include "bmvc/types.hpp"

// Shared by the encoder and the operator: one kernel, one oracle.
namespace bmvc::detail {

// Flat frame index of the top-left pixel of each block.
inline std::vector<std::int32_t> block_bases(const BlockGeometry& g) {
  std::vector<std::int32_t> base(g.block_count);
  for (int b = 0; b < g.block_count; ++b)
    base[b] = (b / g.blocks_x * g.block_h) * g.frame_w + (b % g.blocks_x) * g.block_w;
  return base;
}

// y_i = sum of frame values over the blocks listed for in-block pixel i.
// Additions on sample values are counted; there are no multiplications to
// count — the LUT gather replaced them.
inline void lut_forward(const double* frame, const MaskLut& lut, const BlockGeometry& g,
                        double* y, std::uint64_t* additions) {
  const std::vector<std::int32_t> base = block_bases(g);
  std::uint64_t adds = 0;
  for (int i = 0; i < g.block_pixels(); ++i) {
    const std::int32_t off = (i / g.block_w) * g.frame_w + i % g.block_w;
    double acc = 0.0;
    for (std::int32_t k = lut.start[i]; k < lut.start[i + 1]; ++k) {
      acc += frame[base[lut.blocks[k]] + off];
      ++adds;
    }
    y[i] = acc;
  }
  if (additions) *additions += adds;
}

}  // namespace bmvc::detail
