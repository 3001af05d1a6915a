#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "binsketch/hashing.hpp"
#include "binsketch/sketch_config.hpp"
#include "binsketch/sparse_vector.hpp"

namespace binsketch {

// Bucket of input index i under the seeded mapping: mix64(seed + (i+1)*gamma) mod N.
[[nodiscard]] constexpr auto seeded_bucket(std::uint64_t seed, std::uint64_t i, std::uint32_t sketch_dim) noexcept
    -> std::uint32_t {
  return static_cast<std::uint32_t>(keyed_index_hash(seed, i) % sketch_dim);
}

// The map pi: {0..d-1} -> {0..N-1} shared by all sketches of a dataset.
// Seeded mappings are materialized into a lookup table at construction so that
// sketching costs one load per set bit.
class IndexMapping {
public:
  enum class Kind { seeded, explicit_table };

  // Draws pi from config.seed().
  [[nodiscard]] static auto build(const SketchConfig& config) -> IndexMapping;
  // Uses `table` verbatim; it must have input_dim entries, each < sketch_dim.
  [[nodiscard]] static auto from_table(const SketchConfig& config, std::vector<std::uint32_t> table) -> IndexMapping;

  [[nodiscard]] auto config() const noexcept -> const SketchConfig& { return config_; }
  [[nodiscard]] auto kind() const noexcept -> Kind { return kind_; }
  [[nodiscard]] auto table() const noexcept -> std::span<const std::uint32_t> { return table_; }

  [[nodiscard]] auto operator()(index_t i) const -> std::uint32_t { return table_[i]; }

private:
  IndexMapping(SketchConfig config, Kind kind, std::vector<std::uint32_t> table)
      : config_(config), kind_(kind), table_(std::move(table)) {}

  SketchConfig config_;
  Kind kind_;
  std::vector<std::uint32_t> table_;
};

[[nodiscard]] inline auto build_mapping(const SketchConfig& config) -> IndexMapping {
  return IndexMapping::build(config);
}

} // namespace binsketch
