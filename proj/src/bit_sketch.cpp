#include "binsketch/bit_sketch.hpp"

#include <bit>
#include <string>

#include "binsketch/binary_io.hpp"
#include "binsketch/errors.hpp"
#include "binsketch/parallel.hpp"

namespace binsketch {

namespace {

void require_same_dim(const BitSketch& x, const BitSketch& y) {
  if (x.sketch_dim() != y.sketch_dim()) {
    throw dimension_mismatch("sketch dimensions differ: " + std::to_string(x.sketch_dim()) + " vs " +
                             std::to_string(y.sketch_dim()));
  }
}

auto padding_mask(std::uint32_t sketch_dim) noexcept -> std::uint64_t {
  const unsigned used = sketch_dim & 63U;
  return used == 0 ? 0 : ~((std::uint64_t{1} << used) - 1);
}

template <typename Op>
auto combined_popcount(const BitSketch& x, const BitSketch& y, Op op) -> std::uint32_t {
  require_same_dim(x, y);
  const auto xs = x.words();
  const auto ys = y.words();
  std::uint32_t total = 0;
  for (std::size_t w = 0; w < xs.size(); ++w) {
    total += static_cast<std::uint32_t>(std::popcount(op(xs[w], ys[w])));
  }
  return total;
}

} // namespace

BitSketch::BitSketch(std::uint32_t sketch_dim) : sketch_dim_(sketch_dim), words_(words_for_bits(sketch_dim), 0) {}

BitSketch::BitSketch(std::uint32_t sketch_dim, std::vector<std::uint64_t> words)
    : sketch_dim_(sketch_dim), words_(std::move(words)) {
  if (words_.size() != words_for_bits(sketch_dim_)) {
    throw format_error("sketch of " + std::to_string(sketch_dim_) + " bits needs " +
                       std::to_string(words_for_bits(sketch_dim_)) + " words, got " + std::to_string(words_.size()));
  }
  if (!words_.empty() && (words_.back() & padding_mask(sketch_dim_)) != 0) {
    throw format_error("padding bits beyond sketch dimension are set");
  }
}

auto BitSketch::popcount() const noexcept -> std::uint32_t {
  std::uint32_t total = 0;
  for (const auto w : words_) {
    total += static_cast<std::uint32_t>(std::popcount(w));
  }
  return total;
}

auto BitSketch::set_bits() const -> std::vector<std::uint32_t> {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
      word &= word - 1;
    }
  }
  return out;
}

auto BitSketch::operator&=(const BitSketch& other) -> BitSketch& {
  require_same_dim(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

auto BitSketch::operator|=(const BitSketch& other) -> BitSketch& {
  require_same_dim(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

auto BitSketch::operator^=(const BitSketch& other) -> BitSketch& {
  require_same_dim(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

auto operator&(BitSketch x, const BitSketch& y) -> BitSketch { return x &= y; }
auto operator|(BitSketch x, const BitSketch& y) -> BitSketch { return x |= y; }
auto operator^(BitSketch x, const BitSketch& y) -> BitSketch { return x ^= y; }

auto and_popcount(const BitSketch& x, const BitSketch& y) -> std::uint32_t {
  return combined_popcount(x, y, [](std::uint64_t a, std::uint64_t b) { return a & b; });
}

auto or_popcount(const BitSketch& x, const BitSketch& y) -> std::uint32_t {
  return combined_popcount(x, y, [](std::uint64_t a, std::uint64_t b) { return a | b; });
}

auto xor_popcount(const BitSketch& x, const BitSketch& y) -> std::uint32_t {
  return combined_popcount(x, y, [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
}

auto sketch(const SparseBinaryVector& vector, const IndexMapping& mapping) -> BitSketch {
  const auto& config = mapping.config();
  if (vector.dim() != config.input_dim()) {
    throw dimension_mismatch("vector dimension " + std::to_string(vector.dim()) + " != mapping input dimension " +
                             std::to_string(config.input_dim()));
  }
  BitSketch out{config.sketch_dim()};
  const auto table = mapping.table();
  for (const auto i : vector.support()) {
    out.set(table[i]);
  }
  return out;
}

auto sketch_all(std::span<const SparseBinaryVector> vectors, const IndexMapping& mapping, unsigned threads)
    -> std::vector<BitSketch> {
  std::vector<BitSketch> out(vectors.size());
  parallel_for(vectors.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      out[k] = sketch(vectors[k], mapping);
    }
  });
  return out;
}

void write_packed_record(std::ostream& os, std::string_view magic, const BitSketch& bits, std::uint64_t seed) {
  io::write_magic(os, magic);
  io::write_u32(os, bits.sketch_dim());
  io::write_u64(os, seed);
  for (const auto w : bits.words()) {
    io::write_u64(os, w);
  }
}

auto read_packed_record(std::istream& is, std::string_view magic) -> std::optional<PackedRecord> {
  if (!io::read_magic(is, magic)) {
    return std::nullopt;
  }
  const std::uint32_t n_bits = io::read_u32(is);
  const std::uint64_t seed = io::read_u64(is);
  std::vector<std::uint64_t> words(words_for_bits(n_bits));
  for (auto& w : words) {
    w = io::read_u64(is);
  }
  return PackedRecord{seed, BitSketch{n_bits, std::move(words)}};
}

} // namespace binsketch
