#include "binsketch/sparse_vector.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "binsketch/errors.hpp"

namespace binsketch {

SparseBinaryVector::SparseBinaryVector(std::size_t dim, std::vector<index_t> support)
    : dim_(dim), support_(std::move(support)) {
  if (dim_ == 0) {
    throw parameter_error("sparse vector dimension must be positive");
  }
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (support_[k] >= dim_) {
      throw parameter_error("support index " + std::to_string(support_[k]) + " outside dimension " +
                            std::to_string(dim_));
    }
    if (k > 0 && support_[k] <= support_[k - 1]) {
      throw parameter_error("support must be strictly increasing");
    }
  }
}

auto SparseBinaryVector::from_indices(std::size_t dim, std::vector<index_t> indices) -> SparseBinaryVector {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return SparseBinaryVector{dim, std::move(indices)};
}

auto SparseBinaryVector::contains(index_t i) const noexcept -> bool {
  return std::binary_search(support_.begin(), support_.end(), i);
}

namespace {

void require_same_dim(const SparseBinaryVector& a, const SparseBinaryVector& b) {
  if (a.dim() != b.dim()) {
    throw dimension_mismatch("vector dimensions differ: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
  }
}

} // namespace

auto set_union(const SparseBinaryVector& a, const SparseBinaryVector& b) -> SparseBinaryVector {
  require_same_dim(a, b);
  std::vector<index_t> out;
  out.reserve(a.count() + b.count());
  std::set_union(a.support().begin(), a.support().end(), b.support().begin(), b.support().end(),
                 std::back_inserter(out));
  return SparseBinaryVector{a.dim(), std::move(out)};
}

auto set_intersection(const SparseBinaryVector& a, const SparseBinaryVector& b) -> SparseBinaryVector {
  require_same_dim(a, b);
  std::vector<index_t> out;
  std::set_intersection(a.support().begin(), a.support().end(), b.support().begin(), b.support().end(),
                        std::back_inserter(out));
  return SparseBinaryVector{a.dim(), std::move(out)};
}

auto symmetric_difference(const SparseBinaryVector& a, const SparseBinaryVector& b) -> SparseBinaryVector {
  require_same_dim(a, b);
  std::vector<index_t> out;
  std::set_symmetric_difference(a.support().begin(), a.support().end(), b.support().begin(), b.support().end(),
                                std::back_inserter(out));
  return SparseBinaryVector{a.dim(), std::move(out)};
}

} // namespace binsketch
