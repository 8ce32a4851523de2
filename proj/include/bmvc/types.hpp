#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bmvc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad frame/block dimensions (zero, non-divisible, ...).
struct GeometryError : Error {
  using Error::Error;
};

// Two objects that should agree on dimensions don't.
struct DimensionError : Error {
  using Error::Error;
};

// Invalid sample values (non-finite pixels, degenerate mask, out-of-range codes).
struct DataError : Error {
  using Error::Error;
};

// Measurement exceeds the quantizer scale: mask/geometry mismatch.
struct ScaleError : Error {
  using Error::Error;
};

// Invalid decode/encode settings.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed byte stream (container or image file).
struct ParseError : Error {
  using Error::Error;
};

// 2-D grayscale image, row-major, intensities nominally in [0,1].
// Decoder intermediates may leave that range; codec inputs must not.
struct Frame {
  int height = 0;
  int width = 0;
  std::vector<double> data;

  Frame() = default;
  Frame(int h, int w, double fill = 0.0)
      : height(h), width(w), data(static_cast<size_t>(h) * w, fill) {}

  double& at(int r, int c) { return data[static_cast<size_t>(r) * width + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * width + c]; }
  size_t size() const { return data.size(); }
};

// Full-frame binary pattern: the shared codec key. Regenerating from the
// stored seed must reproduce `bits` exactly.
struct MaskPlane {
  int height = 0;
  int width = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint8_t> bits;  // row-major, each 0 or 1
};

// Non-overlapping tiling of an N_h x N_w frame into B_h x B_w blocks.
// Block dims must divide frame dims, so Cr == block_count exactly.
struct BlockGeometry {
  int frame_h = 0;
  int frame_w = 0;
  int block_h = 0;
  int block_w = 0;
  int blocks_y = 0;  // N_h / B_h
  int blocks_x = 0;  // N_w / B_w
  int block_count = 0;

  int block_pixels() const { return block_h * block_w; }
  int frame_pixels() const { return frame_h * frame_w; }
  int compression_ratio() const { return block_count; }
};

BlockGeometry make_geometry(int frame_h, int frame_w, int block_h, int block_w);

// Flat frame index of in-block pixel i of block b. Blocks tile the frame in
// row-major block order; pixels are row-major within a block.
inline int frame_index(const BlockGeometry& g, int block, int pixel) {
  const int br = block / g.blocks_x, bc = block % g.blocks_x;
  const int ir = pixel / g.block_w, ic = pixel % g.block_w;
  return (br * g.block_h + ir) * g.frame_w + (bc * g.block_w + ic);
}

// Inverse of frame_index: (block, in-block pixel) of a flat frame index.
inline std::pair<int, int> block_coords(const BlockGeometry& g, int frame_idx) {
  const int r = frame_idx / g.frame_w, c = frame_idx % g.frame_w;
  const int block = (r / g.block_h) * g.blocks_x + c / g.block_w;
  const int pixel = (r % g.block_h) * g.block_w + c % g.block_w;
  return {block, pixel};
}

// Precomputed table: entry [b * block_pixels + i] is frame_index(g, b, i).
std::vector<std::int32_t> block_index_map(const BlockGeometry& g);

// The summed measurement block, plus block dims for dimension checks.
struct Measurement {
  int block_h = 0;
  int block_w = 0;
  std::vector<double> values;  // row-major, length block_h * block_w

  Measurement() = default;
  Measurement(int h, int w) : block_h(h), block_w(w), values(static_cast<size_t>(h) * w, 0.0) {}
};

// Uniform quantizer setup: codes occupy [0, 2^bits - 1], scale y_max is
// derived from the mask (max pixel-wise count of contributing blocks), so
// both ends of the channel can reconstruct it without side information.
struct QuantSpec {
  int bits = 8;
  double y_max = 1.0;

  std::uint32_t max_code() const { return (1u << bits) - 1u; }
};

enum class DenoiserKind { tv, nlm, identity };

// Knobs of the iterative decoder: denoiser strength schedule as
// (sigma in 0-255 units, iteration count) pairs.
struct DecodeConfig {
  std::vector<std::pair<double, int>> sigma_schedule = default_schedule();
  DenoiserKind denoiser = DenoiserKind::tv;

  int iterations() const {
    int n = 0;
    for (const auto& [sigma, count] : sigma_schedule) n += count;
    return n;
  }

  static std::vector<std::pair<double, int>> default_schedule() {
    return {{20.0, 20}, {10.0, 20}, {5.0, 20}};
  }
};

void validate(const DecodeConfig& cfg);  // throws ConfigError

}  // namespace bmvc
