#pragma once

#include <cstdint>

#include "binsketch/bit_sketch.hpp"
#include "binsketch/sketch_config.hpp"

namespace binsketch {

// Which projections onto feasible ranges fired while estimating one pair.
struct ClampFlags {
  bool saturated_a = false;          // popcount(x) == N, n_a replaced by input_dim
  bool saturated_b = false;          // popcount(y) == N
  bool log_arg_nonpositive = false;  // inner-product log argument <= 0, raw value -inf
  bool inner_product_low = false;    // raw inner product < 0
  bool inner_product_high = false;   // raw inner product > min(n_a, n_b)
  bool hamming = false;
  bool jaccard = false;
  bool cosine = false;

  [[nodiscard]] auto any() const noexcept -> bool {
    return saturated_a || saturated_b || log_arg_nonpositive || inner_product_low || inner_product_high || hamming ||
           jaccard || cosine;
  }
  friend auto operator==(const ClampFlags&, const ClampFlags&) -> bool = default;
};

// Every intermediate quantity of one pairwise estimate.
struct EstimationTrace {
  std::uint32_t n_as = 0;    // popcount(x)
  std::uint32_t n_bs = 0;    // popcount(y)
  std::uint32_t n_asbs = 0;  // popcount(x AND y)
  double n_a = 0.0;          // cardinality estimate of a
  double n_b = 0.0;
  double n_ab = 0.0;         // inner product estimate
  double ham_ab = 0.0;
  double js_ab = 0.0;
  double cos_ab = 0.0;
  ClampFlags clamped;
};

// |a| recovered from popcount alone: ln(1 - popcount/N) / ln(1 - 1/N).
// A saturated sketch (popcount == N) returns config.input_dim().
[[nodiscard]] auto estimate_cardinality(const BitSketch& s, const SketchConfig& config) -> double;

[[nodiscard]] auto estimate_inner_product(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> double;
[[nodiscard]] auto estimate_hamming(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> double;
[[nodiscard]] auto estimate_jaccard(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> double;
[[nodiscard]] auto estimate_cosine(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> double;

// All four measures at once, sharing n_a, n_b and n_ab. The single-measure
// functions above are projections of this trace.
[[nodiscard]] auto estimate_all(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> EstimationTrace;

} // namespace binsketch
