#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "binsketch/index_mapping.hpp"
#include "binsketch/sparse_vector.hpp"

namespace binsketch {

// Fixed-length packed bit array. Bits past sketch_dim in the last word are always zero.
class BitSketch {
public:
  BitSketch() = default;
  explicit BitSketch(std::uint32_t sketch_dim);
  // Adopts packed words; throws if the word count is wrong or padding bits are set.
  BitSketch(std::uint32_t sketch_dim, std::vector<std::uint64_t> words);

  [[nodiscard]] auto sketch_dim() const noexcept -> std::uint32_t { return sketch_dim_; }
  [[nodiscard]] auto words() const noexcept -> std::span<const std::uint64_t> { return words_; }

  void set(std::uint32_t j) noexcept { words_[j >> 6] |= std::uint64_t{1} << (j & 63U); }
  void flip(std::uint32_t j) noexcept { words_[j >> 6] ^= std::uint64_t{1} << (j & 63U); }
  [[nodiscard]] auto test(std::uint32_t j) const noexcept -> bool { return ((words_[j >> 6] >> (j & 63U)) & 1U) != 0; }

  [[nodiscard]] auto popcount() const noexcept -> std::uint32_t;
  [[nodiscard]] auto set_bits() const -> std::vector<std::uint32_t>;

  auto operator&=(const BitSketch& other) -> BitSketch&;
  auto operator|=(const BitSketch& other) -> BitSketch&;
  auto operator^=(const BitSketch& other) -> BitSketch&;

  friend auto operator==(const BitSketch&, const BitSketch&) -> bool = default;

private:
  std::uint32_t sketch_dim_ = 0;
  std::vector<std::uint64_t> words_;
};

[[nodiscard]] auto operator&(BitSketch x, const BitSketch& y) -> BitSketch;
[[nodiscard]] auto operator|(BitSketch x, const BitSketch& y) -> BitSketch;
[[nodiscard]] auto operator^(BitSketch x, const BitSketch& y) -> BitSketch;

[[nodiscard]] inline auto words_for_bits(std::uint64_t bits) noexcept -> std::size_t {
  return static_cast<std::size_t>((bits + 63) / 64);
}

[[nodiscard]] inline auto popcount(const BitSketch& s) noexcept -> std::uint32_t { return s.popcount(); }
// popcount(x AND y) without materializing the conjunction. Throws dimension_mismatch.
[[nodiscard]] auto and_popcount(const BitSketch& x, const BitSketch& y) -> std::uint32_t;
[[nodiscard]] auto or_popcount(const BitSketch& x, const BitSketch& y) -> std::uint32_t;
[[nodiscard]] auto xor_popcount(const BitSketch& x, const BitSketch& y) -> std::uint32_t;

// OR-sketch: bit j is set iff some support index i has mapping(i) == j.
// Throws dimension_mismatch when vector.dim() differs from the mapping's input dimension.
[[nodiscard]] auto sketch(const SparseBinaryVector& vector, const IndexMapping& mapping) -> BitSketch;

// Sketches every vector; `threads` > 1 partitions the work, the output is
// identical for every thread count.
[[nodiscard]] auto sketch_all(std::span<const SparseBinaryVector> vectors, const IndexMapping& mapping,
                              unsigned threads = 1) -> std::vector<BitSketch>;

// Tagged packed-bit record: magic(4) | n_bits u32 | seed u64 | ceil(n_bits/64) u64 words, all little-endian.
struct PackedRecord {
  std::uint64_t seed = 0;
  BitSketch bits;
};

void write_packed_record(std::ostream& os, std::string_view magic, const BitSketch& bits, std::uint64_t seed);
// Returns nullopt at a clean end of stream.
[[nodiscard]] auto read_packed_record(std::istream& is, std::string_view magic) -> std::optional<PackedRecord>;

inline constexpr std::string_view bsk1_magic = "BSK1";

inline void write_bsk1(std::ostream& os, const BitSketch& s, std::uint64_t seed) {
  write_packed_record(os, bsk1_magic, s, seed);
}
[[nodiscard]] inline auto read_bsk1(std::istream& is) -> std::optional<PackedRecord> {
  return read_packed_record(is, bsk1_magic);
}

} // namespace binsketch
