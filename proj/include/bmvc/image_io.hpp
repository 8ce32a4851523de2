#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmvc/color.hpp"
#include "bmvc/types.hpp"

namespace bmvc {

// Binary PGM (P5), maxval up to 255; samples map to n / maxval. Parsers
// validate the header and exact payload size before allocating, and throw
// ParseError on anything malformed.
Frame parse_pgm(const std::uint8_t* data, size_t size);
Frame read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Frame& frame);  // maxval 255, clamps

// Binary PPM (P6), 8-bit.
ColorImage parse_ppm(const std::uint8_t* data, size_t size);
ColorImage read_ppm(const std::string& path);
void write_ppm(const std::string& path, const ColorImage& image);

// Binary PBM (P4) mask export: mask bit 1 -> black. Rows padded to whole bytes.
void write_pbm(const std::string& path, const MaskPlane& mask);
MaskPlane parse_pbm(const std::uint8_t* data, size_t size);
MaskPlane read_pbm(const std::string& path);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace bmvc
