#include "binsketch/synthetic.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "binsketch/errors.hpp"

namespace binsketch::synthetic {

namespace {

auto distinct_indices(std::size_t dim, std::size_t count, SplitMix64& rng) -> std::vector<index_t> {
  if (count > dim) {
    throw parameter_error("cannot draw " + std::to_string(count) + " distinct indices from " + std::to_string(dim));
  }
  std::unordered_set<index_t> chosen;
  chosen.reserve(count * 2);
  std::vector<index_t> out;
  out.reserve(count);
  for (std::size_t j = dim - count; j < dim; ++j) {
    auto t = static_cast<index_t>(rng.below(j + 1));
    if (!chosen.insert(t).second) {
      t = static_cast<index_t>(j);
      chosen.insert(t);
    }
    out.push_back(t);
  }
  return out;
}

} // namespace

auto random_vector(std::size_t dim, std::size_t count, SplitMix64& rng) -> SparseBinaryVector {
  return SparseBinaryVector::from_indices(dim, distinct_indices(dim, count, rng));
}

auto random_pair(std::size_t dim, std::size_t size_a, std::size_t size_b, std::size_t overlap, SplitMix64& rng)
    -> std::pair<SparseBinaryVector, SparseBinaryVector> {
  if (overlap > size_a || overlap > size_b) {
    throw parameter_error("overlap exceeds a set size");
  }
  auto pool = distinct_indices(dim, size_a + size_b - overlap, rng);
  // Floyd's output order is not uniform; shuffle before splitting into roles.
  for (std::size_t k = pool.size(); k > 1; --k) {
    std::swap(pool[k - 1], pool[static_cast<std::size_t>(rng.below(k))]);
  }
  const auto common_end = pool.begin() + static_cast<std::ptrdiff_t>(overlap);
  const auto a_end = common_end + static_cast<std::ptrdiff_t>(size_a - overlap);
  std::vector<index_t> a(pool.begin(), a_end);
  std::vector<index_t> b(pool.begin(), common_end);
  b.insert(b.end(), a_end, pool.end());
  return {SparseBinaryVector::from_indices(dim, std::move(a)), SparseBinaryVector::from_indices(dim, std::move(b))};
}

auto clustered_corpus(const ClusteredSpec& spec) -> Corpus {
  if (spec.sparsity < 2 || spec.sparsity > spec.dim) {
    throw parameter_error("clustered corpus needs 2 <= sparsity <= dim");
  }
  constexpr std::array<double, 8> replace_fraction = {0.0, 0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.8};
  SplitMix64 rng{spec.seed};
  std::vector<SparseBinaryVector> rows;
  rows.reserve(spec.rows);
  while (rows.size() < spec.rows) {
    const std::size_t base_size = spec.sparsity / 2 + static_cast<std::size_t>(rng.below(spec.sparsity / 2 + 1));
    const auto base = distinct_indices(spec.dim, base_size, rng);
    const std::size_t family = 1 + static_cast<std::size_t>(rng.below(8));
    for (std::size_t m = 0; m < family && rows.size() < spec.rows; ++m) {
      const double fraction = replace_fraction[rng.below(replace_fraction.size())];
      std::unordered_set<index_t> member;
      std::size_t dropped = 0;
      for (const auto i : base) {
        if (rng.unit() < fraction) {
          ++dropped;
        } else {
          member.insert(i);
        }
      }
      while (dropped > 0) {
        const auto fresh = static_cast<index_t>(rng.below(spec.dim));
        if (member.insert(fresh).second) {
          --dropped;
        }
      }
      rows.push_back(SparseBinaryVector::from_indices(spec.dim, std::vector<index_t>(member.begin(), member.end())));
    }
  }
  return Corpus{spec.dim, std::move(rows),
                Provenance{"clustered(rows=" + std::to_string(spec.rows) + ",dim=" + std::to_string(spec.dim) +
                               ",psi=" + std::to_string(spec.sparsity) + ",seed=" + std::to_string(spec.seed) + ")",
                           "synthetic", "generated"}};
}

} // namespace binsketch::synthetic
