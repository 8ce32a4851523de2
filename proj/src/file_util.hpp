#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "bmvc/types.hpp"

namespace bmvc::detail {

inline std::vector<std::uint8_t> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open for reading: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw DataError("read failed: " + path);
  return bytes;
}

inline void spew(const std::string& path, const void* data, size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open for writing: " + path);
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace bmvc::detail
