#include "binsketch/index_mapping.hpp"

#include <string>

#include "binsketch/errors.hpp"

namespace binsketch {

auto IndexMapping::build(const SketchConfig& config) -> IndexMapping {
  std::vector<std::uint32_t> table(config.input_dim());
  const std::uint64_t seed = config.seed();
  const std::uint32_t n = config.sketch_dim();
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = seeded_bucket(seed, i, n);
  }
  return IndexMapping{config, Kind::seeded, std::move(table)};
}

auto IndexMapping::from_table(const SketchConfig& config, std::vector<std::uint32_t> table) -> IndexMapping {
  if (table.size() != config.input_dim()) {
    throw dimension_mismatch("mapping table has " + std::to_string(table.size()) + " entries, expected " +
                             std::to_string(config.input_dim()));
  }
  for (const auto bucket : table) {
    if (bucket >= config.sketch_dim()) {
      throw parameter_error("mapping table entry " + std::to_string(bucket) + " outside sketch dimension");
    }
  }
  return IndexMapping{config, Kind::explicit_table, std::move(table)};
}

} // namespace binsketch
