#pragma once

#include <cstdint>
#include <limits>

namespace binsketch {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
[[nodiscard]] constexpr auto mix64(std::uint64_t z) noexcept -> std::uint64_t {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Keyed hash of a 0-based index. Every seeded structure in the library (mapping,
// MinHash, SimHash) is built from this one recipe so results are bit-exact across platforms.
[[nodiscard]] constexpr auto keyed_index_hash(std::uint64_t key, std::uint64_t index) noexcept -> std::uint64_t {
  return mix64(key + (index + 1) * golden_gamma);
}

// Deterministic splitmix64 stream. Used everywhere the library needs randomness
// (sampling, splits, synthetic data) so that nothing depends on the standard
// library's implementation-defined distributions.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr auto next() noexcept -> std::uint64_t {
    state_ += golden_gamma;
    return mix64(state_);
  }
  constexpr auto operator()() noexcept -> std::uint64_t { return next(); }

  static constexpr auto min() noexcept -> std::uint64_t { return 0; }
  static constexpr auto max() noexcept -> std::uint64_t { return std::numeric_limits<std::uint64_t>::max(); }

  // Uniform integer in [0, bound) by rejection; bound must be > 0.
  constexpr auto below(std::uint64_t bound) noexcept -> std::uint64_t {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = next();
    while (x >= limit) {
      x = next();
    }
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr auto unit() noexcept -> double { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

} // namespace binsketch
