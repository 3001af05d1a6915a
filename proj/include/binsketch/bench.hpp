#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binsketch/corpus.hpp"
#include "binsketch/oracle.hpp"

namespace binsketch::bench {

enum class Algorithm { binsketch, minhash, simhash, bcs, exact };

[[nodiscard]] auto to_string(Algorithm a) -> std::string_view;
[[nodiscard]] auto parse_algorithm(std::string_view name) -> std::optional<Algorithm>;
// binsketch and exact estimate every measure; MinHash only Jaccard, SimHash only cosine, BCS only Hamming.
[[nodiscard]] auto supports(Algorithm a, Measure m) noexcept -> bool;

// Jaccard/cosine thresholds used by the ranking and MSE experiments.
inline constexpr double default_thresholds[] = {0.95, 0.9, 0.85, 0.8, 0.6, 0.5, 0.2, 0.1};

struct Options {
  unsigned threads = 1;
  // false: every algorithm gets sketch_dim bits, a 64-bit MinHash coordinate costing 64.
  // true: every algorithm gets sketch_dim coordinates.
  bool equal_coordinates = false;
};

// Coordinates the algorithm may use under a budget of `sketch_dim`.
[[nodiscard]] auto coordinates_for(Algorithm a, std::uint32_t sketch_dim, const Options& options) noexcept
    -> std::uint32_t;

struct PairEstimate {
  double value = 0.0;
  bool clamped = false;
};

// A corpus compressed by one algorithm; answers pairwise estimates from sketches alone.
class SketchedCorpus {
public:
  SketchedCorpus(const Corpus& corpus, Algorithm algorithm, std::uint32_t sketch_dim, std::uint64_t seed,
                 const Options& options = {});
  ~SketchedCorpus();
  SketchedCorpus(SketchedCorpus&&) noexcept;
  auto operator=(SketchedCorpus&&) noexcept -> SketchedCorpus&;
  SketchedCorpus(const SketchedCorpus&) = delete;
  auto operator=(const SketchedCorpus&) -> SketchedCorpus& = delete;

  // Throws parameter_error when the algorithm cannot estimate `measure`.
  [[nodiscard]] auto estimate(std::size_t i, std::size_t j, Measure measure) const -> PairEstimate;
  [[nodiscard]] auto algorithm() const noexcept -> Algorithm;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct MseRow {
  Algorithm algorithm{};
  Measure measure{};
  double threshold = 0.0;
  std::uint32_t sketch_dim = 0;
  std::uint64_t seed = 0;
  std::size_t pair_count = 0;
  double mse = 0.0;
  std::optional<double> neg_log_mse;  // -ln(mse), Jaccard and cosine only
  double clamp_rate = 0.0;
};

struct MseReport {
  std::vector<MseRow> rows;
};

// For every (algorithm, N, seed) the corpus is sketched once; for every threshold
// the squared error is averaged over the exact threshold pairs. Thresholds
// without pairs produce no row.
[[nodiscard]] auto run_mse(const Corpus& corpus, Measure measure, std::span<const double> thresholds,
                           std::span<const std::uint32_t> sizes, std::span<const std::uint64_t> seeds,
                           std::span<const Algorithm> algorithms, const Options& options = {}) -> MseReport;

// Mean of squared differences with compensated summation in index order.
[[nodiscard]] auto mean_squared_error(std::span<const double> estimates, std::span<const double> truths) -> double;

struct RankingMetrics {
  double accuracy = 0.0;   // |O & O'| / |O | O'|
  double precision = 0.0;  // |O & O'| / |O'|, 0 when O' is empty
  double recall = 0.0;     // |O & O'| / |O|, 0 when O is empty
  double f1 = 0.0;         // 2pr / (p + r), 0 when p + r == 0
};

// Both index lists must be sorted and unique; at least one must be nonempty.
[[nodiscard]] auto ranking_metrics(std::span<const std::uint32_t> truth, std::span<const std::uint32_t> retrieved)
    -> RankingMetrics;

struct RankingRow {
  Algorithm algorithm{};
  Measure measure{};
  double threshold = 0.0;
  std::uint32_t sketch_dim = 0;
  std::uint64_t seed = 0;
  RankingMetrics metrics;
  std::size_t query_count = 0;      // queries averaged
  std::size_t skipped_queries = 0;  // O and O' both empty
};

struct RankingReport {
  std::vector<RankingRow> rows;
};

struct Split {
  std::vector<std::uint32_t> queries;   // sorted
  std::vector<std::uint32_t> training;  // sorted
};

// Seeded 10% / 90% query/training partition (at least one query).
[[nodiscard]] auto split_queries(std::size_t rows, std::uint64_t split_seed) -> Split;

// Macro-averaged retrieval metrics. Requires at least 10 rows.
[[nodiscard]] auto run_ranking(const Corpus& corpus, Measure measure, std::span<const double> thresholds,
                               std::span<const std::uint32_t> sizes, std::span<const std::uint64_t> seeds,
                               std::span<const Algorithm> algorithms, std::uint64_t split_seed,
                               const Options& options = {}) -> RankingReport;

struct TimingRow {
  Algorithm algorithm{};
  std::uint32_t sketch_dim = 0;
  double mapping_setup_seconds = 0.0;
  double sketch_seconds = 0.0;
  double vectors_per_second = 0.0;

  [[nodiscard]] auto total_seconds() const noexcept -> double { return mapping_setup_seconds + sketch_seconds; }
};

struct TimingReport {
  std::vector<TimingRow> rows;
};

// Median wall-clock time of each phase over `repetitions` (>= 3) single-threaded runs.
[[nodiscard]] auto run_timing(const Corpus& corpus, std::span<const std::uint32_t> sizes,
                              std::span<const Algorithm> algorithms, std::size_t repetitions, std::uint64_t seed = 1,
                              const Options& options = {}) -> TimingReport;

} // namespace binsketch::bench
