#include "bmvc/image_io.hpp"

#include <algorithm>
#include <cmath>

#include "file_util.hpp"

namespace bmvc {

namespace {

struct Cursor {
  const std::uint8_t* p;
  size_t size;
  size_t pos = 0;

  bool done() const { return pos >= size; }
  std::uint8_t peek() const { return p[pos]; }
};

bool is_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

void skip_space_and_comments(Cursor& c) {
  while (!c.done()) {
    if (is_space(c.peek())) {
      ++c.pos;
    } else if (c.peek() == '#') {
      while (!c.done() && c.peek() != '\n') ++c.pos;
    } else {
      return;
    }
  }
}

// Bounded ASCII integer; anything over 7 digits is rejected before it can
// overflow or describe an absurd image.
long parse_int(Cursor& c) {
  skip_space_and_comments(c);
  long v = 0;
  int digits = 0;
  while (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
    v = v * 10 + (c.peek() - '0');
    ++c.pos;
    if (++digits > 7) throw ParseError("pnm: number too large");
  }
  if (digits == 0) throw ParseError("pnm: expected a number");
  return v;
}

void expect_magic(Cursor& c, char digit) {
  if (c.size < 2 || c.p[0] != 'P' || c.p[1] != digit) throw ParseError("pnm: bad magic");
  c.pos = 2;
}

// Header ends with exactly one whitespace byte before the raw samples.
void expect_header_end(Cursor& c) {
  if (c.done() || !is_space(c.peek())) throw ParseError("pnm: missing header terminator");
  ++c.pos;
}

void check_dims(long w, long h) {
  if (w < 1 || h < 1 || w > 65535 || h > 65535) throw ParseError("pnm: unsupported dimensions");
}

// Remaining payload is checked against the declared size before any
// image-sized allocation happens.
const std::uint8_t* payload(Cursor& c, size_t needed) {
  if (c.size - c.pos < needed) throw ParseError("pnm: truncated pixel data");
  return c.p + c.pos;
}

std::uint8_t to_byte(double v, int maxval) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * maxval));
}

}  // namespace

Frame parse_pgm(const std::uint8_t* data, size_t size) {
  Cursor c{data, size};
  expect_magic(c, '5');
  const long w = parse_int(c), h = parse_int(c), maxval = parse_int(c);
  check_dims(w, h);
  if (maxval < 1 || maxval > 255) throw ParseError("pgm: maxval must be in [1,255]");
  expect_header_end(c);
  const std::uint8_t* px = payload(c, static_cast<size_t>(w) * h);

  Frame f(static_cast<int>(h), static_cast<int>(w));
  // divide per pixel: k / 255.0 round-trips bit-exactly against the writer,
  // k * (1.0 / 255) would be off by an ulp for some codes
  const double m = static_cast<double>(maxval);
  for (size_t i = 0; i < f.size(); ++i) f.data[i] = px[i] / m;
  return f;
}

Frame read_pgm(const std::string& path) {
  const auto bytes = detail::slurp(path);
  return parse_pgm(bytes.data(), bytes.size());
}

void write_pgm(const std::string& path, const Frame& frame) {
  if (frame.height < 1 || frame.width < 1) throw GeometryError("pgm: empty frame");
  std::string header =
      "P5\n" + std::to_string(frame.width) + " " + std::to_string(frame.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + frame.size());
  for (double v : frame.data) out.push_back(to_byte(v, 255));
  detail::spew(path, out.data(), out.size());
}

ColorImage parse_ppm(const std::uint8_t* data, size_t size) {
  Cursor c{data, size};
  expect_magic(c, '6');
  const long w = parse_int(c), h = parse_int(c), maxval = parse_int(c);
  check_dims(w, h);
  if (maxval < 1 || maxval > 255) throw ParseError("ppm: maxval must be in [1,255]");
  expect_header_end(c);
  const std::uint8_t* px = payload(c, 3 * static_cast<size_t>(w) * h);

  ColorImage img(static_cast<int>(h), static_cast<int>(w));
  const double m = static_cast<double>(maxval);
  for (size_t i = 0; i < img.r.size(); ++i) {
    img.r[i] = px[3 * i] / m;
    img.g[i] = px[3 * i + 1] / m;
    img.b[i] = px[3 * i + 2] / m;
  }
  return img;
}

ColorImage read_ppm(const std::string& path) {
  const auto bytes = detail::slurp(path);
  return parse_ppm(bytes.data(), bytes.size());
}

void write_ppm(const std::string& path, const ColorImage& image) {
  if (image.height < 1 || image.width < 1) throw GeometryError("ppm: empty image");
  std::string header =
      "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + 3 * image.r.size());
  for (size_t i = 0; i < image.r.size(); ++i) {
    out.push_back(to_byte(image.r[i], 255));
    out.push_back(to_byte(image.g[i], 255));
    out.push_back(to_byte(image.b[i], 255));
  }
  detail::spew(path, out.data(), out.size());
}

void write_pbm(const std::string& path, const MaskPlane& mask) {
  if (mask.height < 1 || mask.width < 1) throw GeometryError("pbm: empty mask");
  std::string header = "P4\n" + std::to_string(mask.width) + " " + std::to_string(mask.height) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const size_t row_bytes = (static_cast<size_t>(mask.width) + 7) / 8;
  for (int r = 0; r < mask.height; ++r) {
    size_t base = out.size();
    out.resize(base + row_bytes, 0);
    for (int c = 0; c < mask.width; ++c)
      if (mask.bits[static_cast<size_t>(r) * mask.width + c])
        out[base + c / 8] |= static_cast<std::uint8_t>(0x80u >> (c % 8));
  }
  detail::spew(path, out.data(), out.size());
}

MaskPlane parse_pbm(const std::uint8_t* data, size_t size) {
  Cursor c{data, size};
  expect_magic(c, '4');
  const long w = parse_int(c), h = parse_int(c);
  check_dims(w, h);
  expect_header_end(c);
  const size_t row_bytes = (static_cast<size_t>(w) + 7) / 8;
  const std::uint8_t* px = payload(c, row_bytes * h);

  MaskPlane m;
  m.height = static_cast<int>(h);
  m.width = static_cast<int>(w);
  m.bits.resize(static_cast<size_t>(h) * w);
  for (long r = 0; r < h; ++r)
    for (long col = 0; col < w; ++col)
      m.bits[static_cast<size_t>(r) * w + col] =
          (px[r * row_bytes + col / 8] >> (7 - col % 8)) & 1u;
  return m;
}

MaskPlane read_pbm(const std::string& path) {
  const auto bytes = detail::slurp(path);
  return parse_pbm(bytes.data(), bytes.size());
}

std::vector<std::uint8_t> read_file(const std::string& path) { return detail::slurp(path); }

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  detail::spew(path, bytes.data(), bytes.size());
}

}  // namespace bmvc
