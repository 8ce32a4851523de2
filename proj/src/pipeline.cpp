#include "bmvc/pipeline.hpp"

#include <algorithm>

#include "bmvc/encoder.hpp"
#include "bmvc/mask.hpp"

namespace bmvc {

StreamHeader make_header(const CodecSettings& s, int frame_h, int frame_w) {
  if (frame_h < 1 || frame_w < 1 || frame_h > 65535 || frame_w > 65535)
    throw GeometryError("pipeline: frame dims must fit in u16");
  StreamHeader h;
  h.codec_id = s.codec_id;
  h.frame_h = static_cast<std::uint16_t>(frame_h);
  h.frame_w = static_cast<std::uint16_t>(frame_w);
  switch (s.codec_id) {
    case kCodecBmvc:
      if (s.block_h < 1 || s.block_h > 65535 || s.block_w < 1 || s.block_w > 65535)
        throw ConfigError("pipeline: block dims must fit in u16");
      h.block_h = static_cast<std::uint16_t>(s.block_h);
      h.block_w = static_cast<std::uint16_t>(s.block_w);
      break;
    case kCodecRandomDs:
      h.block_h = static_cast<std::uint16_t>(s.sample_count >> 16);
      h.block_w = static_cast<std::uint16_t>(s.sample_count & 0xFFFFu);
      break;
    case kCodecBlockCs:
      h.block_h = 24;
      if (s.measurements_per_block < 1 || s.measurements_per_block > 576)
        throw ConfigError("pipeline: measurements per block must be in [1,576]");
      h.block_w = static_cast<std::uint16_t>(s.measurements_per_block);
      break;
    default:
      throw ConfigError("pipeline: unknown codec id");
  }
  h.seed = s.seed;
  if (s.bits < 8 || s.bits > 16) throw ConfigError("pipeline: bits must be in [8,16]");
  h.bits = static_cast<std::uint8_t>(s.bits);
  h.color_mode = s.color_mode;
  if (s.chroma_factor < 1 || s.chroma_factor > 255)
    throw ConfigError("pipeline: chroma factor must be in [1,255]");
  // Gray streams carry no chroma; keep the field canonical.
  h.chroma_factor = s.color_mode == kColorYuv ? static_cast<std::uint8_t>(s.chroma_factor) : 1;
  h.frame_count = 0;
  validate(h);
  return h;
}

Codec::Codec(const StreamHeader& header) : header_(header) {
  validate(header_);
  switch (header_.codec_id) {
    case kCodecBmvc: {
      const BlockGeometry geom =
          make_geometry(header_.frame_h, header_.frame_w, header_.block_h, header_.block_w);
      const MaskPlane mask = generate_mask(header_.seed, header_.frame_h, header_.frame_w);
      BmvcOperator op = BmvcOperator::build(mask, geom);
      luma_quant_ = make_quant_spec(header_.bits, op.lut);
      op_ = std::move(op);
      break;
    }
    case kCodecRandomDs:
      op_ = make_random_ds(header_.seed, header_.frame_h, header_.frame_w,
                           static_cast<int>(header_.sample_count()));
      luma_quant_ = QuantSpec{header_.bits, 1.0};
      break;
    case kCodecBlockCs: {
      BlockCsOperator op = BlockCsOperator::build(header_.seed, header_.block_w);
      luma_quant_ = QuantSpec{header_.bits, op.y_max};
      op_ = std::move(op);
      break;
    }
  }
}

std::uint64_t Codec::effective_seed() const {
  if (const auto* bcs = std::get_if<BlockCsOperator>(&op_)) return bcs->final_seed;
  return header_.seed;
}

std::vector<std::uint16_t> Codec::encode_frame(const Frame& gray, OpCounters* counters) const {
  if (header_.color_mode != kColorGray)
    throw ConfigError("pipeline: color stream cannot take gray frames");
  if (gray.height != header_.frame_h || gray.width != header_.frame_w)
    throw DimensionError("pipeline: frame dims do not match stream header");

  if (const auto* op = std::get_if<BmvcOperator>(&op_))
    return quantize(encode(gray, op->lut, op->geom, counters), luma_quant_);
  if (const auto* pattern = std::get_if<RandomDsPattern>(&op_))
    return quantize(random_ds_encode(gray, *pattern), luma_quant_);
  return quantize(block_cs_encode(gray, std::get<BlockCsOperator>(op_), counters), luma_quant_);
}

std::vector<std::uint16_t> Codec::encode_frame(const ColorImage& rgb, OpCounters* counters) const {
  if (header_.color_mode != kColorYuv)
    throw ConfigError("pipeline: gray stream cannot take color frames");
  if (rgb.height != header_.frame_h || rgb.width != header_.frame_w)
    throw DimensionError("pipeline: frame dims do not match stream header");

  const YuvPlanes yuv = rgb_to_yuv(rgb);

  std::vector<std::uint16_t> codes;
  if (const auto* op = std::get_if<BmvcOperator>(&op_))
    codes = quantize(encode(yuv.y, op->lut, op->geom, counters), luma_quant_);
  else if (const auto* pattern = std::get_if<RandomDsPattern>(&op_))
    codes = quantize(random_ds_encode(yuv.y, *pattern), luma_quant_);
  else
    codes = quantize(block_cs_encode(yuv.y, std::get<BlockCsOperator>(op_), counters),
                     luma_quant_);

  const QuantSpec chroma_spec{header_.bits, 1.0};
  for (const Frame* plane : {&yuv.u, &yuv.v}) {
    const Frame small = chroma_down(*plane, header_.chroma_factor);
    const auto chroma_codes = quantize(small.data, chroma_spec);
    codes.insert(codes.end(), chroma_codes.begin(), chroma_codes.end());
  }
  return codes;
}

DecodeOutput Codec::decode_frame(const std::vector<std::uint16_t>& codes, const DecodeConfig& cfg,
                                 const Frame* reference) const {
  if (codes.size() != codes_per_frame(header_))
    throw DimensionError("pipeline: code count does not match stream header");

  const size_t luma_n = luma_codes_per_frame(header_);
  const std::vector<std::uint16_t> luma_codes(codes.begin(), codes.begin() + luma_n);

  DecodeOutput out;
  DecodeResult result;
  if (const auto* op = std::get_if<BmvcOperator>(&op_)) {
    const Measurement y =
        dequantize(luma_codes, luma_quant_, header_.block_h, header_.block_w);
    result = decode(y, *op, cfg, nullptr, reference);
  } else if (const auto* pattern = std::get_if<RandomDsPattern>(&op_)) {
    result = random_ds_decode(dequantize(luma_codes, luma_quant_), *pattern, cfg, reference);
  } else {
    result = block_cs_decode(dequantize(luma_codes, luma_quant_), std::get<BlockCsOperator>(op_),
                             header_.frame_h, header_.frame_w, cfg, reference);
  }
  out.y = std::move(result.frame);
  out.trace = std::move(result.trace);

  if (header_.color_mode == kColorYuv) {
    const QuantSpec chroma_spec{header_.bits, 1.0};
    const int ch = header_.frame_h / header_.chroma_factor;
    const int cw = header_.frame_w / header_.chroma_factor;
    const size_t plane_n = static_cast<size_t>(ch) * cw;

    YuvPlanes yuv;
    yuv.y = out.y;
    Frame* planes[2] = {&yuv.u, &yuv.v};
    for (int k = 0; k < 2; ++k) {
      const auto begin = codes.begin() + luma_n + k * plane_n;
      Frame small(ch, cw);
      small.data = dequantize(std::vector<std::uint16_t>(begin, begin + plane_n), chroma_spec);
      *planes[k] = chroma_up(small, header_.chroma_factor);
    }
    ColorImage rgb = yuv_to_rgb(yuv);
    for (auto* chan : {&rgb.r, &rgb.g, &rgb.b})
      for (double& v : *chan) v = std::clamp(v, 0.0, 1.0);
    out.rgb = std::move(rgb);
  }
  return out;
}

}  // namespace bmvc
