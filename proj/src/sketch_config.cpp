#include "binsketch/sketch_config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "binsketch/errors.hpp"

namespace binsketch {

auto recommended_sketch_size(std::uint64_t sparsity, double error_prob) -> std::uint32_t {
  if (sparsity == 0) {
    throw parameter_error("sparsity must be at least 1");
  }
  if (!(error_prob > 0.0 && error_prob < 1.0)) {
    throw parameter_error("error probability must lie in (0, 1)");
  }
  const auto psi = static_cast<double>(sparsity);
  const double size = std::ceil(psi * std::sqrt(psi / 2.0 * std::log(2.0 / error_prob)));
  if (size > static_cast<double>(std::numeric_limits<std::uint32_t>::max())) {
    throw parameter_error("recommended sketch size overflows 32 bits");
  }
  return std::max<std::uint32_t>(2, static_cast<std::uint32_t>(size));
}

SketchConfig::SketchConfig(std::size_t input_dim, std::uint32_t sketch_dim, std::uint64_t seed,
                           std::uint64_t sparsity_bound)
    : input_dim_(input_dim), sketch_dim_(sketch_dim), seed_(seed), sparsity_bound_(sparsity_bound),
      shrink_factor_(1.0 - 1.0 / static_cast<double>(sketch_dim)), log_shrink_(0.0) {
  if (input_dim_ == 0) {
    throw parameter_error("input dimension must be positive");
  }
  if (input_dim_ > std::numeric_limits<std::uint32_t>::max()) {
    throw parameter_error("input dimension exceeds 32-bit index range");
  }
  if (sketch_dim_ < 2) {
    throw parameter_error("sketch dimension must be at least 2");
  }
  if (sparsity_bound_ == 0) {
    throw parameter_error("sparsity bound must be positive");
  }
  log_shrink_ = std::log(shrink_factor_);
}

} // namespace binsketch
