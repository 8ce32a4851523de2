#include "bmvc/container.hpp"

#include <cstring>

#include "file_util.hpp"

namespace bmvc {

namespace {

constexpr char kMagic[4] = {'B', 'M', 'V', 'C'};

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  put_u16(out, static_cast<std::uint16_t>(v >> 16));
  put_u16(out, static_cast<std::uint16_t>(v));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
  put_u32(out, static_cast<std::uint32_t>(v));
}

std::uint16_t get_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(get_u16(p)) << 16) | get_u16(p + 2);
}

std::uint64_t get_u64(const std::uint8_t* p) {
  return (static_cast<std::uint64_t>(get_u32(p)) << 32) | get_u32(p + 4);
}

}  // namespace

size_t luma_codes_per_frame(const StreamHeader& h) {
  switch (h.codec_id) {
    case kCodecBmvc:
      return static_cast<size_t>(h.block_h) * h.block_w;
    case kCodecRandomDs:
      return h.sample_count();
    case kCodecBlockCs:
      return static_cast<size_t>(h.block_w) * (h.frame_h / 24) * (h.frame_w / 24);
  }
  throw ConfigError("container: unknown codec id");
}

size_t codes_per_frame(const StreamHeader& h) {
  size_t n = luma_codes_per_frame(h);
  if (h.color_mode == kColorYuv)
    n += 2 * (static_cast<size_t>(h.frame_h) / h.chroma_factor) * (h.frame_w / h.chroma_factor);
  return n;
}

void validate(const StreamHeader& h) {
  if (h.version != 1) throw ConfigError("container: unsupported version");
  if (h.frame_h < 1 || h.frame_w < 1) throw ConfigError("container: zero frame dims");
  const size_t pixels = static_cast<size_t>(h.frame_h) * h.frame_w;
  switch (h.codec_id) {
    case kCodecBmvc:
      if (h.block_h < 1 || h.block_w < 1 || h.frame_h % h.block_h != 0 ||
          h.frame_w % h.block_w != 0)
        throw ConfigError("container: block dims must divide frame dims");
      break;
    case kCodecRandomDs:
      if (h.sample_count() < 1 || h.sample_count() > pixels)
        throw ConfigError("container: sample count out of range");
      break;
    case kCodecBlockCs:
      if (h.block_h != 24 || h.block_w < 1 || h.block_w > 576)
        throw ConfigError("container: block CS fields must be (24, M<=576)");
      if (h.frame_h % 24 != 0 || h.frame_w % 24 != 0)
        throw ConfigError("container: block CS frame dims must be multiples of 24");
      break;
    default:
      throw ConfigError("container: unknown codec id");
  }
  if (h.bits < 8 || h.bits > 16) throw ConfigError("container: bits must be in [8,16]");
  if (h.color_mode != kColorGray && h.color_mode != kColorYuv)
    throw ConfigError("container: unknown color mode");
  if (h.chroma_factor < 1) throw ConfigError("container: chroma factor must be >= 1");
  if (h.color_mode == kColorYuv &&
      (h.frame_h % h.chroma_factor != 0 || h.frame_w % h.chroma_factor != 0))
    throw ConfigError("container: chroma factor does not divide frame dims");
}

std::vector<std::uint8_t> write_stream(const Stream& s) {
  validate(s.header);
  const StreamHeader& h = s.header;
  if (s.frames.size() != h.frame_count)
    throw DimensionError("container: frame count does not match payload");
  const size_t per_frame = codes_per_frame(h);
  const std::uint32_t max_code = (1u << h.bits) - 1u;

  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + 2 * per_frame * s.frames.size());
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(h.version);
  out.push_back(h.codec_id);
  put_u16(out, h.frame_h);
  put_u16(out, h.frame_w);
  put_u16(out, h.block_h);
  put_u16(out, h.block_w);
  put_u64(out, h.seed);
  out.push_back(h.bits);
  out.push_back(h.color_mode);
  out.push_back(h.chroma_factor);
  put_u32(out, h.frame_count);

  for (const auto& frame : s.frames) {
    if (frame.size() != per_frame)
      throw DimensionError("container: code count does not match header");
    for (std::uint16_t code : frame) {
      if (code > max_code) throw DataError("container: code exceeds bit depth");
      put_u16(out, code);
    }
  }
  return out;
}

Stream read_stream(const std::uint8_t* data, size_t size) {
  if (size < kHeaderBytes) throw ParseError("container: truncated header");
  if (std::memcmp(data, kMagic, 4) != 0) throw ParseError("container: bad magic");

  StreamHeader h;
  h.version = data[4];
  h.codec_id = data[5];
  h.frame_h = get_u16(data + 6);
  h.frame_w = get_u16(data + 8);
  h.block_h = get_u16(data + 10);
  h.block_w = get_u16(data + 12);
  h.seed = get_u64(data + 14);
  h.bits = data[22];
  h.color_mode = data[23];
  h.chroma_factor = data[24];
  h.frame_count = get_u32(data + 25);

  try {
    validate(h);
  } catch (const ConfigError& e) {
    throw ParseError(e.what());
  }

  // Sizes are fully determined by the header; anything else is malformed.
  // Checking before allocating keeps memory bounded by the input size.
  const std::uint64_t per_frame = codes_per_frame(h);
  if (h.frame_count != 0 && per_frame > UINT64_MAX / 2 / h.frame_count)
    throw ParseError("container: declared payload overflows");
  const std::uint64_t payload = 2ull * per_frame * h.frame_count;
  if (size - kHeaderBytes != payload)
    throw ParseError("container: payload size does not match header");

  const std::uint32_t max_code = (1u << h.bits) - 1u;
  Stream s;
  s.header = h;
  s.frames.resize(h.frame_count);
  const std::uint8_t* p = data + kHeaderBytes;
  for (auto& frame : s.frames) {
    frame.resize(per_frame);
    for (auto& code : frame) {
      code = get_u16(p);
      p += 2;
      if (code > max_code) throw ParseError("container: code exceeds bit depth");
    }
  }
  return s;
}

Stream read_stream(const std::vector<std::uint8_t>& bytes) {
  return read_stream(bytes.data(), bytes.size());
}

void save_stream(const std::string& path, const Stream& s) {
  const std::vector<std::uint8_t> bytes = write_stream(s);
  detail::spew(path, bytes.data(), bytes.size());
}

Stream load_stream(const std::string& path) {
  const std::vector<std::uint8_t> bytes = detail::slurp(path);
  return read_stream(bytes);
}

}  // namespace bmvc
