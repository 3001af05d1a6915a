#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binsketch/sparse_vector.hpp"

namespace binsketch {

struct Provenance {
  std::string source;        // path or description
  std::string format;        // "docword", "csv-categorical", "sbv", "synthetic", ...
  std::string binarization;  // how raw values became bits
};

// An immutable collection of equal-dimension binary vectors.
class Corpus {
public:
  Corpus(std::size_t dim, std::vector<SparseBinaryVector> vectors, Provenance provenance = {},
         std::optional<std::vector<std::string>> labels = std::nullopt);

  [[nodiscard]] auto dim() const noexcept -> std::size_t { return dim_; }
  [[nodiscard]] auto size() const noexcept -> std::size_t { return vectors_.size(); }
  [[nodiscard]] auto vectors() const noexcept -> const std::vector<SparseBinaryVector>& { return vectors_; }
  [[nodiscard]] auto operator[](std::size_t i) const -> const SparseBinaryVector& { return vectors_[i]; }
  [[nodiscard]] auto labels() const noexcept -> const std::optional<std::vector<std::string>>& { return labels_; }
  [[nodiscard]] auto provenance() const noexcept -> const Provenance& { return provenance_; }

  // Largest support size in the corpus (observed sparsity psi).
  [[nodiscard]] auto max_count() const noexcept -> std::size_t { return max_count_; }
  [[nodiscard]] auto mean_count() const noexcept -> double { return mean_count_; }

private:
  std::size_t dim_;
  std::vector<SparseBinaryVector> vectors_;
  Provenance provenance_;
  std::optional<std::vector<std::string>> labels_;
  std::size_t max_count_ = 0;
  double mean_count_ = 0.0;
};

// Seeded uniform sample of `count` rows without replacement; original row order
// (and labels) preserved. Throws parameter_error when count > corpus.size().
[[nodiscard]] auto sample_rows(const Corpus& corpus, std::size_t count, std::uint64_t seed) -> Corpus;

} // namespace binsketch
