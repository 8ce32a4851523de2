#pragma once

#include <cstdint>
#include <vector>

#include "bmvc/encoder.hpp"
#include "bmvc/pnp_decoder.hpp"
#include "bmvc/types.hpp"

namespace bmvc {

// Random down-sampling: keep |indices| raw pixels, decode as inpainting.
struct RandomDsPattern {
  int height = 0;
  int width = 0;
  std::uint64_t seed = 0;
  std::vector<std::int32_t> indices;  // unique, sorted ascending
};

// Partial Fisher-Yates over all pixels, driven by the pinned PRNG.
RandomDsPattern make_random_ds(std::uint64_t seed, int height, int width, int sample_count);

// Frame values at the sampled indices, in index order.
std::vector<double> random_ds_encode(const Frame& frame, const RandomDsPattern& pattern);

// Same PnP loop; the projection just resets sampled pixels to their measured
// values. Initialization scatters the samples into a zero frame.
DecodeResult random_ds_decode(const std::vector<double>& samples, const RandomDsPattern& pattern,
                              const DecodeConfig& cfg, const Frame* reference = nullptr);

// Block-wise CS: every 24x24 block is sensed by the same dense binary matrix
// A (M x 576). Unlike the diagonal-structured codec this mixes pixels within a
// block, so measurements range up to the max row sum of A — the dynamic-range
// cost the quantization experiments expose.
struct BlockCsOperator {
  static constexpr int kBlockSize = 24;
  static constexpr int kBlockPixels = kBlockSize * kBlockSize;

  int m = 0;                          // measurements per block
  std::uint64_t seed = 0;             // seed requested by the caller
  std::uint64_t final_seed = 0;       // seed actually used (after resampling)
  std::vector<std::uint8_t> matrix;   // M x 576, row-major
  std::vector<double> chol;           // lower Cholesky factor of A A^T, M x M
  double y_max = 0.0;                 // max row sum of A

  // Fair Bernoulli A from the pinned PRNG; if A A^T comes out singular the
  // seed is bumped by one and redrawn (recorded in final_seed).
  static BlockCsOperator build(std::uint64_t seed, int m);

  // For tests: adopt an explicit matrix. Throws DataError if A A^T is singular.
  static BlockCsOperator from_matrix(const std::vector<std::uint8_t>& a, int m);

  // x := x + A^T (A A^T)^{-1} (y - A x) for one block (x, y raw pointers of
  // length 576 and M). The projection shared by init and decode.
  void project_block(double* x, const double* y) const;
};

// Per-block y = A x, blocks row-major, concatenated. Frame dims must be
// multiples of 24. Counts one addition per accumulate when instrumented.
std::vector<double> block_cs_encode(const Frame& frame, const BlockCsOperator& op,
                                    OpCounters* counters = nullptr);

DecodeResult block_cs_decode(const std::vector<double>& measurements, const BlockCsOperator& op,
                             int frame_h, int frame_w, const DecodeConfig& cfg,
                             const Frame* reference = nullptr);

}  // namespace bmvc
