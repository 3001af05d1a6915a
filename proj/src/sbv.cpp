#include "binsketch/sbv.hpp"

#include <fstream>
#include <vector>

#include "binsketch/binary_io.hpp"
#include "binsketch/errors.hpp"

namespace binsketch {

namespace {

void write_varint(std::ostream& os, std::uint32_t v) {
  while (v >= 0x80U) {
    os.put(static_cast<char>((v & 0x7FU) | 0x80U));
    v >>= 7;
  }
  os.put(static_cast<char>(v));
}

auto read_varint(std::istream& is) -> std::uint32_t {
  std::uint64_t value = 0;
  for (int shift = 0; shift < 35; shift += 7) {
    const int c = is.get();
    if (c == std::char_traits<char>::eof()) {
      throw format_error("truncated varint in SBV1 record");
    }
    value |= static_cast<std::uint64_t>(c & 0x7F) << shift;
    if ((c & 0x80) == 0) {
      if (value > 0xFFFFFFFFULL) {
        throw format_error("varint overflows 32 bits");
      }
      return static_cast<std::uint32_t>(value);
    }
  }
  throw format_error("varint longer than 5 bytes");
}

} // namespace

void write_sbv1(std::ostream& os, const SparseBinaryVector& v) {
  io::write_magic(os, sbv1_magic);
  io::write_u32(os, static_cast<std::uint32_t>(v.dim()));
  io::write_u32(os, static_cast<std::uint32_t>(v.count()));
  index_t previous = 0;
  bool first = true;
  for (const auto i : v.support()) {
    write_varint(os, first ? i : i - previous);
    previous = i;
    first = false;
  }
}

auto read_sbv1(std::istream& is) -> std::optional<SparseBinaryVector> {
  if (!io::read_magic(is, sbv1_magic)) {
    return std::nullopt;
  }
  const std::uint32_t dim = io::read_u32(is);
  const std::uint32_t count = io::read_u32(is);
  if (dim == 0) {
    throw format_error("SBV1 record with zero dimension");
  }
  if (count > dim) {
    throw format_error("SBV1 record holds more indices than its dimension");
  }
  std::vector<index_t> support;
  support.reserve(count);
  std::uint64_t current = 0;
  for (std::uint32_t k = 0; k < count; ++k) {
    const std::uint32_t delta = read_varint(is);
    if (k > 0 && delta == 0) {
      throw format_error("SBV1 support not strictly increasing");
    }
    current = (k == 0) ? delta : current + delta;
    if (current >= dim) {
      throw format_error("SBV1 index outside dimension");
    }
    support.push_back(static_cast<index_t>(current));
  }
  return SparseBinaryVector{dim, std::move(support)};
}

void write_sbv_corpus(std::ostream& os, const Corpus& corpus) {
  for (const auto& v : corpus.vectors()) {
    write_sbv1(os, v);
  }
}

auto read_sbv_corpus(std::istream& is, const std::string& source) -> Corpus {
  std::vector<SparseBinaryVector> vectors;
  while (auto v = read_sbv1(is)) {
    if (!vectors.empty() && v->dim() != vectors.front().dim()) {
      throw format_error("SBV1 records of differing dimension in one corpus");
    }
    vectors.push_back(std::move(*v));
  }
  if (vectors.empty()) {
    throw format_error("SBV1 corpus holds no records");
  }
  const std::size_t dim = vectors.front().dim();
  return Corpus{dim, std::move(vectors), Provenance{source, "sbv", "stored bits"}};
}

auto load_sbv_corpus(const std::string& path) -> Corpus {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw format_error("cannot open '" + path + "'");
  }
  return read_sbv_corpus(in, path);
}

} // namespace binsketch
