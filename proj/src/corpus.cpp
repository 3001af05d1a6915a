#include "binsketch/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "binsketch/errors.hpp"
#include "binsketch/hashing.hpp"

namespace binsketch {

Corpus::Corpus(std::size_t dim, std::vector<SparseBinaryVector> vectors, Provenance provenance,
               std::optional<std::vector<std::string>> labels)
    : dim_(dim), vectors_(std::move(vectors)), provenance_(std::move(provenance)), labels_(std::move(labels)) {
  if (dim_ == 0) {
    throw parameter_error("corpus dimension must be positive");
  }
  if (labels_ && labels_->size() != vectors_.size()) {
    throw parameter_error("label count does not match vector count");
  }
  std::size_t total = 0;
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    if (vectors_[k].dim() != dim_) {
      throw dimension_mismatch("vector " + std::to_string(k) + " has dimension " + std::to_string(vectors_[k].dim()) +
                               ", corpus has " + std::to_string(dim_));
    }
    max_count_ = std::max(max_count_, vectors_[k].count());
    total += vectors_[k].count();
  }
  mean_count_ = vectors_.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(vectors_.size());
}

auto sample_rows(const Corpus& corpus, std::size_t count, std::uint64_t seed) -> Corpus {
  if (count > corpus.size()) {
    throw parameter_error("cannot sample " + std::to_string(count) + " rows from a corpus of " +
                          std::to_string(corpus.size()));
  }
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Partial Fisher-Yates: the first `count` slots become a uniform sample.
  SplitMix64 rng{seed};
  for (std::size_t k = 0; k < count; ++k) {
    const auto pick = k + static_cast<std::size_t>(rng.below(order.size() - k));
    std::swap(order[k], order[pick]);
  }
  order.resize(count);
  std::sort(order.begin(), order.end());

  std::vector<SparseBinaryVector> vectors;
  vectors.reserve(count);
  std::optional<std::vector<std::string>> labels;
  if (corpus.labels()) {
    labels.emplace();
    labels->reserve(count);
  }
  for (const auto row : order) {
    vectors.push_back(corpus[row]);
    if (labels) {
      labels->push_back((*corpus.labels())[row]);
    }
  }
  Provenance prov = corpus.provenance();
  prov.source += " [sample " + std::to_string(count) + " seed " + std::to_string(seed) + "]";
  return Corpus{corpus.dim(), std::move(vectors), std::move(prov), std::move(labels)};
}

} // namespace binsketch
