#pragma once

#include <cstddef>
#include <cstdint>

namespace binsketch {

// Smallest sketch length N that the inner-product concentration argument
// supports for vectors with at most `sparsity` ones and failure probability
// `error_prob`: ceil(psi * sqrt(psi/2 * ln(2/rho))), never below 2.
[[nodiscard]] auto recommended_sketch_size(std::uint64_t sparsity, double error_prob) -> std::uint32_t;

// Immutable parameters shared by every sketch of a dataset.
class SketchConfig {
public:
  // Throws parameter_error when input_dim == 0, sketch_dim < 2 or sparsity_bound == 0.
  SketchConfig(std::size_t input_dim, std::uint32_t sketch_dim, std::uint64_t seed, std::uint64_t sparsity_bound = 1);

  [[nodiscard]] auto input_dim() const noexcept -> std::size_t { return input_dim_; }
  [[nodiscard]] auto sketch_dim() const noexcept -> std::uint32_t { return sketch_dim_; }
  [[nodiscard]] auto seed() const noexcept -> std::uint64_t { return seed_; }
  [[nodiscard]] auto sparsity_bound() const noexcept -> std::uint64_t { return sparsity_bound_; }

  // n = 1 - 1/N, the probability that one index misses a fixed bucket.
  [[nodiscard]] auto shrink_factor() const noexcept -> double { return shrink_factor_; }
  // ln(n), cached since every estimate divides by it.
  [[nodiscard]] auto log_shrink() const noexcept -> double { return log_shrink_; }

  friend auto operator==(const SketchConfig&, const SketchConfig&) -> bool = default;

private:
  std::size_t input_dim_;
  std::uint32_t sketch_dim_;
  std::uint64_t seed_;
  std::uint64_t sparsity_bound_;
  double shrink_factor_;
  double log_shrink_;
};

} // namespace binsketch
