#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "binsketch/bit_sketch.hpp"
#include "binsketch/index_mapping.hpp"
#include "binsketch/sparse_vector.hpp"

// Comparator sketchers: MinHash for Jaccard, SimHash for cosine, BCS (parity buckets) for Hamming.
namespace binsketch::baselines {

inline constexpr std::uint64_t empty_min = std::numeric_limits<std::uint64_t>::max();

// Key of the j-th hash function derived from a base seed.
[[nodiscard]] constexpr auto coordinate_key(std::uint64_t seed, std::uint32_t j) noexcept -> std::uint64_t {
  return mix64(seed + j);
}

struct MinHashSketch {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> mins;  // k entries; empty_min for an empty support

  [[nodiscard]] auto k() const noexcept -> std::uint32_t { return static_cast<std::uint32_t>(mins.size()); }
  friend auto operator==(const MinHashSketch&, const MinHashSketch&) -> bool = default;
};

// mins[j] = min over the support of keyed_index_hash(coordinate_key(seed, j), i).
[[nodiscard]] auto minhash_sketch(const SparseBinaryVector& v, std::uint32_t k, std::uint64_t seed) -> MinHashSketch;
// Fraction of agreeing coordinates. Throws dimension_mismatch on differing k or seed.
[[nodiscard]] auto minhash_estimate_jaccard(const MinHashSketch& x, const MinHashSketch& y) -> double;

struct SimHashSketch {
  std::uint64_t seed = 0;
  BitSketch bits;  // one bit per hyperplane

  [[nodiscard]] auto k() const noexcept -> std::uint32_t { return bits.sketch_dim(); }
  friend auto operator==(const SimHashSketch&, const SimHashSketch&) -> bool = default;
};

// Sign of the support's projection on r_j for j < k. r_j[i] is +1 when the top
// bit of keyed_index_hash(coordinate_key(seed, j), i) is set and -1 otherwise;
// a zero projection maps to bit 1.
[[nodiscard]] auto simhash_sketch(const SparseBinaryVector& v, std::uint32_t k, std::uint64_t seed) -> SimHashSketch;
// Fraction of agreeing bits, the estimator of 1 - theta/pi.
[[nodiscard]] auto simhash_collision_rate(const SimHashSketch& x, const SimHashSketch& y) -> double;
// cos(pi * (1 - collision rate)), in [-1, 1].
[[nodiscard]] auto simhash_estimate_cosine(const SimHashSketch& x, const SimHashSketch& y) -> double;

struct BcsSketch {
  std::uint64_t seed = 0;
  std::uint64_t input_dim = 0;  // saturation cap for the Hamming estimate
  BitSketch bits;               // parity of each bucket

  [[nodiscard]] auto n_buckets() const noexcept -> std::uint32_t { return bits.sketch_dim(); }
  friend auto operator==(const BcsSketch&, const BcsSketch&) -> bool = default;
};

[[nodiscard]] auto bcs_sketch(const SparseBinaryVector& v, const IndexMapping& mapping) -> BcsSketch;
// Inverts the parity-collision law: with m = popcount(x XOR y) returns
// ln(1 - 2m/N) / ln(1 - 2/N) clamped to [0, d]; 2m >= N saturates to d.
[[nodiscard]] auto bcs_estimate_hamming(const BcsSketch& x, const BcsSketch& y) -> double;

inline constexpr std::string_view mnh1_magic = "MNH1";
inline constexpr std::string_view smh1_magic = "SMH1";
inline constexpr std::string_view bcs1_magic = "BCS1";

// MNH1: magic | k u32 | seed u64 | k u64 minima.
void write_mnh1(std::ostream& os, const MinHashSketch& s);
[[nodiscard]] auto read_mnh1(std::istream& is) -> std::optional<MinHashSketch>;
// SMH1 and BCS1 share the BSK1 packed layout under their own tags.
void write_smh1(std::ostream& os, const SimHashSketch& s);
[[nodiscard]] auto read_smh1(std::istream& is) -> std::optional<SimHashSketch>;
void write_bcs1(std::ostream& os, const BcsSketch& s);
// The header carries no input dimension; the caller supplies it.
[[nodiscard]] auto read_bcs1(std::istream& is, std::uint64_t input_dim) -> std::optional<BcsSketch>;

} // namespace binsketch::baselines
