#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "binsketch/errors.hpp"

// Little-endian primitives shared by the on-disk sketch and vector formats.
namespace binsketch::io {

inline void write_u32(std::ostream& os, std::uint32_t v) {
  std::array<char, 4> buf{};
  for (int k = 0; k < 4; ++k) {
    buf[k] = static_cast<char>((v >> (8 * k)) & 0xFFU);
  }
  os.write(buf.data(), buf.size());
}

inline void write_u64(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> buf{};
  for (int k = 0; k < 8; ++k) {
    buf[k] = static_cast<char>((v >> (8 * k)) & 0xFFU);
  }
  os.write(buf.data(), buf.size());
}

inline void write_magic(std::ostream& os, std::string_view magic) { os.write(magic.data(), 4); }

inline auto read_u32(std::istream& is) -> std::uint32_t {
  std::array<unsigned char, 4> buf{};
  if (!is.read(reinterpret_cast<char*>(buf.data()), buf.size())) {
    throw format_error("truncated record (expected u32)");
  }
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k) {
    v |= static_cast<std::uint32_t>(buf[k]) << (8 * k);
  }
  return v;
}

inline auto read_u64(std::istream& is) -> std::uint64_t {
  std::array<unsigned char, 8> buf{};
  if (!is.read(reinterpret_cast<char*>(buf.data()), buf.size())) {
    throw format_error("truncated record (expected u64)");
  }
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) {
    v |= static_cast<std::uint64_t>(buf[k]) << (8 * k);
  }
  return v;
}

// Reads a 4-byte magic. Returns false on a clean end of stream before any byte;
// throws format_error on a partial or mismatching tag.
inline auto read_magic(std::istream& is, std::string_view expected) -> bool {
  std::array<char, 4> buf{};
  is.read(buf.data(), buf.size());
  if (is.gcount() == 0 && is.eof()) {
    return false;
  }
  if (is.gcount() != 4) {
    throw format_error("truncated record header");
  }
  if (std::string_view(buf.data(), 4) != expected) {
    throw format_error("bad magic '" + std::string(buf.data(), 4) + "', expected '" + std::string(expected) + "'");
  }
  return true;
}

} // namespace binsketch::io
