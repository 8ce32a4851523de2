#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bmvc/types.hpp"

namespace bmvc {

inline constexpr std::uint8_t kCodecBmvc = 0;
inline constexpr std::uint8_t kCodecRandomDs = 1;
inline constexpr std::uint8_t kCodecBlockCs = 2;

inline constexpr std::uint8_t kColorGray = 0;
inline constexpr std::uint8_t kColorYuv = 1;  // Y coded, chroma decimated

// Fixed 29-byte header, all multi-byte fields big-endian:
//   "BMVC" | version u8 | codec u8 | N_h u16 | N_w u16 | B_h u16 | B_w u16 |
//   seed u64 | bits u8 | color u8 | chroma u8 | frame count u32
// The (B_h, B_w) pair is codec-specific: block dims for BMVC; the u32 sample
// count (B_h high half) for random DS; (24, M) for block CS. The mask never
// travels — only its seed.
struct StreamHeader {
  std::uint8_t version = 1;
  std::uint8_t codec_id = kCodecBmvc;
  std::uint16_t frame_h = 0;
  std::uint16_t frame_w = 0;
  std::uint16_t block_h = 0;
  std::uint16_t block_w = 0;
  std::uint64_t seed = 0;
  std::uint8_t bits = 8;
  std::uint8_t color_mode = kColorGray;
  std::uint8_t chroma_factor = 1;
  std::uint32_t frame_count = 0;

  std::uint32_t sample_count() const {  // codec 1
    return (static_cast<std::uint32_t>(block_h) << 16) | block_w;
  }
};

inline constexpr size_t kHeaderBytes = 29;

struct Stream {
  StreamHeader header;
  // One entry per frame: luma codes, then (color mode 1) U codes, V codes.
  std::vector<std::vector<std::uint16_t>> frames;
};

// Measurement codes per frame for the luma plane alone, and with chroma.
size_t luma_codes_per_frame(const StreamHeader& h);
size_t codes_per_frame(const StreamHeader& h);

// Throws ConfigError if the header violates any invariant (bad codec id,
// geometry, bits outside [8,16], ...). Used by both writer and parser.
void validate(const StreamHeader& h);

std::vector<std::uint8_t> write_stream(const Stream& s);

// Parses and validates; every declared size is checked against the actual
// byte count before anything is allocated, so hostile inputs fail cleanly.
Stream read_stream(const std::uint8_t* data, size_t size);
Stream read_stream(const std::vector<std::uint8_t>& bytes);

void save_stream(const std::string& path, const Stream& s);
Stream load_stream(const std::string& path);

}  // namespace bmvc
