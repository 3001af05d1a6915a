#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "binsketch/corpus.hpp"
#include "binsketch/hashing.hpp"

namespace binsketch::synthetic {

// `count` distinct indices drawn uniformly from [0, dim) (Floyd's algorithm).
[[nodiscard]] auto random_vector(std::size_t dim, std::size_t count, SplitMix64& rng) -> SparseBinaryVector;

// A pair with |a| = size_a, |b| = size_b and exactly `overlap` common indices.
[[nodiscard]] auto random_pair(std::size_t dim, std::size_t size_a, std::size_t size_b, std::size_t overlap,
                               SplitMix64& rng) -> std::pair<SparseBinaryVector, SparseBinaryVector>;

struct ClusteredSpec {
  std::size_t rows = 500;
  std::size_t dim = 10'000;
  std::size_t sparsity = 100;  // no vector exceeds this many ones
  std::uint64_t seed = 1;
};

// Rows come in small families. Each family has a base set of sparsity/2 to
// sparsity indices; members replace a random fraction (0 to 0.8) of the base
// with fresh indices. Pairwise similarities therefore cover the whole [0, 1]
// range instead of clustering near zero as independent sparse sets do.
[[nodiscard]] auto clustered_corpus(const ClusteredSpec& spec) -> Corpus;

} // namespace binsketch::synthetic
