#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "bmvc/baselines.hpp"
#include "bmvc/color.hpp"
#include "bmvc/container.hpp"
#include "bmvc/forward_operator.hpp"
#include "bmvc/pnp_decoder.hpp"
#include "bmvc/types.hpp"

namespace bmvc {

// What the CLI collects; make_header() turns it into the on-disk header,
// applying the per-codec (B_h, B_w) encoding and validating everything.
struct CodecSettings {
  std::uint8_t codec_id = kCodecBmvc;
  int block_h = 0, block_w = 0;    // BMVC
  std::uint32_t sample_count = 0;  // random DS
  int measurements_per_block = 0;  // block CS
  std::uint64_t seed = 42;
  int bits = 8;
  std::uint8_t color_mode = kColorGray;
  int chroma_factor = 4;
};

StreamHeader make_header(const CodecSettings& s, int frame_h, int frame_w);

struct DecodeOutput {
  Frame y;                        // decoded luma, clipped to [0,1]
  std::optional<ColorImage> rgb;  // present for color streams
  std::vector<TracePoint> trace;
};

// One codec instance per stream: the header fixes geometry and seed, so the
// operator (mask LUT / sampling pattern / sensing matrix) is built once and
// reused across frames.
class Codec {
 public:
  explicit Codec(const StreamHeader& header);

  // Quantized codes for one frame, appended layout per the container.
  std::vector<std::uint16_t> encode_frame(const Frame& gray, OpCounters* counters = nullptr) const;
  std::vector<std::uint16_t> encode_frame(const ColorImage& rgb, OpCounters* counters = nullptr) const;

  DecodeOutput decode_frame(const std::vector<std::uint16_t>& codes, const DecodeConfig& cfg,
                            const Frame* reference = nullptr) const;

  const StreamHeader& header() const { return header_; }
  const QuantSpec& luma_quant() const { return luma_quant_; }
  std::uint64_t effective_seed() const;  // block CS may have resampled

 private:
  StreamHeader header_;
  QuantSpec luma_quant_;
  std::variant<BmvcOperator, RandomDsPattern, BlockCsOperator> op_;
};

}  // namespace bmvc
