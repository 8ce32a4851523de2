#include "bmvc/encoder.hpp"

#include <cmath>

#include "lut_kernel.hpp"

namespace bmvc {

Measurement encode(const Frame& frame, const MaskLut& lut, const BlockGeometry& geom,
                   OpCounters* counters) {
  if (frame.height != geom.frame_h || frame.width != geom.frame_w)
    throw DimensionError("encode: frame dims do not match geometry");
  if (lut.block_h != geom.block_h || lut.block_w != geom.block_w)
    throw DimensionError("encode: LUT was built for a different block size");
  for (double v : frame.data)
    if (!std::isfinite(v)) throw DataError("encode: non-finite pixel");

  Measurement y(geom.block_h, geom.block_w);
  detail::lut_forward(frame.data.data(), lut, geom, y.values.data(),
                      counters ? &counters->additions : nullptr);
  return y;
}

QuantSpec make_quant_spec(int bits, const MaskLut& lut) {
  if (bits < 8 || bits > 16) throw ConfigError("quant: bits must be in [8,16]");
  if (lut.max_r < 1) throw DataError("quant: degenerate mask, y_max would be 0");
  return QuantSpec{bits, static_cast<double>(lut.max_r)};
}

std::vector<std::uint16_t> quantize(const std::vector<double>& values, const QuantSpec& spec) {
  const double max_code = spec.max_code();
  std::vector<std::uint16_t> codes(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0) || values[i] > spec.y_max)
      throw ScaleError("quantize: value outside [0, y_max] — mask/geometry mismatch");
    // llround = round half away from zero, the pinned rule.
    codes[i] = static_cast<std::uint16_t>(std::llround(values[i] / spec.y_max * max_code));
  }
  return codes;
}

std::vector<std::uint16_t> quantize(const Measurement& m, const QuantSpec& spec) {
  return quantize(m.values, spec);
}

std::vector<double> dequantize(const std::vector<std::uint16_t>& codes, const QuantSpec& spec) {
  const double max_code = spec.max_code();
  std::vector<double> values(codes.size());
  for (size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] > spec.max_code()) throw DataError("dequantize: code out of range for bit depth");
    values[i] = codes[i] * spec.y_max / max_code;
  }
  return values;
}

Measurement dequantize(const std::vector<std::uint16_t>& codes, const QuantSpec& spec,
                       int block_h, int block_w) {
  if (codes.size() != static_cast<size_t>(block_h) * block_w)
    throw DimensionError("dequantize: code count does not match block dims");
  Measurement m(block_h, block_w);
  m.values = dequantize(codes, spec);
  return m;
}

}  // namespace bmvc
