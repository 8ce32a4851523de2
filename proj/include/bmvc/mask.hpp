#pragma once

#include <cstdint>
#include <vector>

#include "bmvc/types.hpp"

namespace bmvc {

// Per-in-block-pixel list of contributing blocks, CSR layout: the blocks of
// pixel i are blocks[start[i] .. start[i+1]), sorted ascending. r[i] is the
// list length — the diagonal of Phi Phi^T. This is what makes the encoder a
// gather-and-add with no multiplies.
struct MaskLut {
  int block_h = 0;
  int block_w = 0;
  std::vector<std::int32_t> start;   // length block_h*block_w + 1
  std::vector<std::int32_t> blocks;  // concatenated block lists
  std::vector<std::int32_t> r;       // r[i] = start[i+1] - start[i]
  std::int32_t max_r = 0;
  bool has_zero_r = false;  // some pixel gets no contribution (flagged, not fatal)

  int pixels() const { return block_h * block_w; }
};

// Fair Bernoulli bits from the pinned PRNG (top bit of successive xoshiro256**
// outputs seeded via SplitMix64), emitted row-major. Deterministic in seed.
MaskPlane generate_mask(std::uint64_t seed, int height, int width);

MaskLut build_lut(const MaskPlane& mask, const BlockGeometry& geom);

}  // namespace bmvc
