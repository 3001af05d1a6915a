#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace binsketch {

using index_t = std::uint32_t;

// A d-dimensional binary vector stored as its support: the strictly increasing
// list of positions holding a one.
class SparseBinaryVector {
public:
  SparseBinaryVector() = default;

  // Takes a support that is already strictly increasing and inside [0, dim).
  // Throws parameter_error otherwise.
  SparseBinaryVector(std::size_t dim, std::vector<index_t> support);

  // Sorts and deduplicates arbitrary indices before validating the range.
  [[nodiscard]] static auto from_indices(std::size_t dim, std::vector<index_t> indices) -> SparseBinaryVector;

  [[nodiscard]] auto dim() const noexcept -> std::size_t { return dim_; }
  [[nodiscard]] auto support() const noexcept -> std::span<const index_t> { return support_; }
  [[nodiscard]] auto count() const noexcept -> std::size_t { return support_.size(); }
  [[nodiscard]] auto empty() const noexcept -> bool { return support_.empty(); }
  [[nodiscard]] auto contains(index_t i) const noexcept -> bool;

  friend auto operator==(const SparseBinaryVector&, const SparseBinaryVector&) -> bool = default;

private:
  std::size_t dim_ = 0;
  std::vector<index_t> support_;
};

// Bitwise OR / AND / XOR of two vectors of equal dimension.
[[nodiscard]] auto set_union(const SparseBinaryVector& a, const SparseBinaryVector& b) -> SparseBinaryVector;
[[nodiscard]] auto set_intersection(const SparseBinaryVector& a, const SparseBinaryVector& b) -> SparseBinaryVector;
[[nodiscard]] auto symmetric_difference(const SparseBinaryVector& a, const SparseBinaryVector& b)
    -> SparseBinaryVector;

} // namespace binsketch
