#include "binsketch/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binsketch/errors.hpp"

namespace binsketch {

namespace {

void require_config(const BitSketch& s, const SketchConfig& config) {
  if (s.sketch_dim() != config.sketch_dim()) {
    throw dimension_mismatch("sketch has " + std::to_string(s.sketch_dim()) + " bits, config expects " +
                             std::to_string(config.sketch_dim()));
  }
}

// ln(fraction of empty buckets). Both the cardinality and the inner-product
// estimates go through this one expression; (a, a) relies on it to cancel exactly.
auto log_empty_fraction(std::uint32_t occupied, std::uint32_t sketch_dim) -> double {
  return std::log(static_cast<double>(sketch_dim - occupied) / static_cast<double>(sketch_dim));
}

auto cardinality_from_count(std::uint32_t occupied, const SketchConfig& config, bool& saturated) -> double {
  saturated = occupied >= config.sketch_dim();
  if (saturated) {
    return static_cast<double>(config.input_dim());
  }
  if (occupied == 0) {
    return 0.0;
  }
  return log_empty_fraction(occupied, config.sketch_dim()) / config.log_shrink();
}

auto clamp_flagged(double value, double lo, double hi, bool& flag) -> double {
  if (value < lo) {
    flag = true;
    return lo;
  }
  if (value > hi) {
    flag = true;
    return hi;
  }
  return value;
}

} // namespace

auto estimate_cardinality(const BitSketch& s, const SketchConfig& config) -> double {
  require_config(s, config);
  bool saturated = false;
  return cardinality_from_count(s.popcount(), config, saturated);
}

auto estimate_all(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> EstimationTrace {
  require_config(x, config);
  require_config(y, config);

  EstimationTrace t;
  t.n_as = x.popcount();
  t.n_bs = y.popcount();
  t.n_asbs = and_popcount(x, y);
  t.n_a = cardinality_from_count(t.n_as, config, t.clamped.saturated_a);
  t.n_b = cardinality_from_count(t.n_bs, config, t.clamped.saturated_b);

  // The log argument n^{n_a} + n^{n_b} + n_asbs/N - 1. Without saturation
  // n^{n_a} = 1 - n_as/N exactly, so the argument is the empty fraction of the
  // OR sketch and is formed from integers. A saturated side has every bit set,
  // so n_asbs equals the other popcount and the argument collapses to n^{n_a}
  // (or 2 n^{n_a} when both are saturated); it is taken in log form because
  // n^{input_dim} underflows for large inputs.
  const std::uint32_t big_n = config.sketch_dim();
  double log_arg = 0.0;
  if (!t.clamped.saturated_a && !t.clamped.saturated_b) {
    const std::uint32_t occupied_union = t.n_as + t.n_bs - t.n_asbs;
    if (occupied_union >= big_n) {
      t.clamped.log_arg_nonpositive = true;
    } else {
      log_arg = log_empty_fraction(occupied_union, big_n);
    }
  } else if (t.clamped.saturated_a && t.clamped.saturated_b) {
    log_arg = t.n_a * config.log_shrink() + std::log(2.0);
  } else {
    log_arg = (t.clamped.saturated_a ? t.n_a : t.n_b) * config.log_shrink();
  }

  const double upper = std::min(t.n_a, t.n_b);
  if (t.clamped.log_arg_nonpositive) {
    t.n_ab = 0.0;
    t.clamped.inner_product_low = true;
  } else {
    const double raw = t.n_a + t.n_b - log_arg / config.log_shrink();
    t.n_ab = raw < 0.0 ? 0.0 : raw;
    t.clamped.inner_product_low = raw < 0.0;
    if (t.n_ab > upper) {
      t.n_ab = upper;
      t.clamped.inner_product_high = true;
    }
  }

  t.ham_ab = clamp_flagged(t.n_a + t.n_b - 2.0 * t.n_ab, 0.0, t.n_a + t.n_b, t.clamped.hamming);

  if (t.n_as == 0 && t.n_bs == 0) {
    t.js_ab = 1.0;
  } else {
    const double union_est = t.n_a + t.n_b - t.n_ab;
    t.js_ab = union_est <= 0.0 ? 0.0 : clamp_flagged(t.n_ab / union_est, 0.0, 1.0, t.clamped.jaccard);
  }

  if (t.n_a == 0.0 || t.n_b == 0.0) {
    t.cos_ab = 0.0;
  } else {
    t.cos_ab = clamp_flagged(t.n_ab / std::sqrt(t.n_a * t.n_b), 0.0, 1.0, t.clamped.cosine);
  }
  return t;
}

auto estimate_inner_product(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> double {
  return estimate_all(x, y, config).n_ab;
}

auto estimate_hamming(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> double {
  return estimate_all(x, y, config).ham_ab;
}

auto estimate_jaccard(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> double {
  return estimate_all(x, y, config).js_ab;
}

auto estimate_cosine(const BitSketch& x, const BitSketch& y, const SketchConfig& config) -> double {
  return estimate_all(x, y, config).cos_ab;
}

} // namespace binsketch
