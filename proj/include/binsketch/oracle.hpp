#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "binsketch/corpus.hpp"
#include "binsketch/sparse_vector.hpp"

namespace binsketch {

enum class Measure { inner_product, hamming, jaccard, cosine };

[[nodiscard]] auto to_string(Measure m) -> std::string_view;
// Accepts "ip", "inner_product", "hamming", "jaccard", "cosine".
[[nodiscard]] auto parse_measure(std::string_view name) -> std::optional<Measure>;

// Hamming is a distance (smaller is closer); the others are similarities.
[[nodiscard]] constexpr auto is_distance(Measure m) noexcept -> bool { return m == Measure::hamming; }
// Whether `value` passes threshold `j`: <= for distances, >= for similarities.
[[nodiscard]] constexpr auto passes_threshold(Measure m, double value, double j) noexcept -> bool {
  return is_distance(m) ? value <= j : value >= j;
}

} // namespace binsketch

namespace binsketch::oracle {

struct ExactSimilarities {
  std::uint64_t ip = 0;
  std::uint64_t hamming = 0;
  double jaccard = 0.0;  // 1 when both supports are empty
  double cosine = 0.0;   // 0 when either support is empty

  [[nodiscard]] auto value(Measure m) const noexcept -> double;
};

// Merge walk over the two sorted supports. Throws dimension_mismatch.
[[nodiscard]] auto exact_similarities(const SparseBinaryVector& a, const SparseBinaryVector& b) -> ExactSimilarities;

// E|a_s| = N (1 - n^|a|).
[[nodiscard]] auto expected_sketch_weight(std::uint64_t count, std::uint32_t sketch_dim) -> double;
// E<a_s, b_s> = N (1 - n^|a| - n^|b| + n^(|a| + |b| - IP)).
[[nodiscard]] auto expected_sketch_overlap(std::uint64_t count_a, std::uint64_t count_b, std::uint64_t ip,
                                           std::uint32_t sketch_dim) -> double;

struct Expectations {
  double sketch_weight = 0.0;   // mean |a_s|
  double sketch_overlap = 0.0;  // mean <a_s, b_s>
};

inline constexpr std::uint64_t max_enumerated_mappings = 1'000'000;

// Averages |a_s| and <a_s, b_s> over all N^d mappings. Counts are accumulated
// as integers, so the only rounding is the final division.
// Throws parameter_error when N^d exceeds max_enumerated_mappings.
[[nodiscard]] auto enumerate_expectations(const SparseBinaryVector& a, const SparseBinaryVector& b,
                                          std::uint32_t sketch_dim) -> Expectations;

struct PairValue {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  double value = 0.0;

  friend auto operator==(const PairValue&, const PairValue&) -> bool = default;
};

// Every unordered pair (i < j) whose exact similarity passes the threshold,
// sorted by (i, j). Quadratic on purpose.
[[nodiscard]] auto threshold_pairs(const Corpus& corpus, Measure measure, double threshold, unsigned threads = 1)
    -> std::vector<PairValue>;

// "i,j,value" rows with a header, values at full double precision.
void write_pairs_csv(std::ostream& os, const std::vector<PairValue>& pairs);

} // namespace binsketch::oracle
