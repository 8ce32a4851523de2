#pragma once

#include <cstdint>
#include <vector>

#include "bmvc/mask.hpp"
#include "bmvc/types.hpp"

namespace bmvc {

// Arithmetic instrumentation for the encode hot path. `additions` counts
// accumulator adds; `multiplications` stays 0 by construction (the LUT
// replaces the mask multiply) and exists to prove exactly that.
struct OpCounters {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
};

// Sum of the modulated blocks, driven by the LUT: output pixel i is the sum of
// frame values at (b, i) over the blocks b listed for i. Accumulation follows
// LUT list order, so results are bit-reproducible.
Measurement encode(const Frame& frame, const MaskLut& lut, const BlockGeometry& geom,
                   OpCounters* counters = nullptr);

// y_max = max_i r_i: the largest value any measurement pixel can reach for
// inputs in [0,1]. Known to both ends from the mask alone.
QuantSpec make_quant_spec(int bits, const MaskLut& lut);

// code = round(y / y_max * (2^bits - 1)), half away from zero.
std::vector<std::uint16_t> quantize(const std::vector<double>& values, const QuantSpec& spec);
std::vector<std::uint16_t> quantize(const Measurement& m, const QuantSpec& spec);

std::vector<double> dequantize(const std::vector<std::uint16_t>& codes, const QuantSpec& spec);
Measurement dequantize(const std::vector<std::uint16_t>& codes, const QuantSpec& spec,
                       int block_h, int block_w);

}  // namespace bmvc
