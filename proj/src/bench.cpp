#include "binsketch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <variant>

#include "binsketch/baselines.hpp"
#include "binsketch/bit_sketch.hpp"
#include "binsketch/errors.hpp"
#include "binsketch/estimators.hpp"
#include "binsketch/hashing.hpp"
#include "binsketch/parallel.hpp"

namespace binsketch::bench {

auto to_string(Algorithm a) -> std::string_view {
  switch (a) {
  case Algorithm::binsketch:
    return "binsketch";
  case Algorithm::minhash:
    return "minhash";
  case Algorithm::simhash:
    return "simhash";
  case Algorithm::bcs:
    return "bcs";
  case Algorithm::exact:
    return "exact";
  }
  return "unknown";
}

auto parse_algorithm(std::string_view name) -> std::optional<Algorithm> {
  for (const auto a : {Algorithm::binsketch, Algorithm::minhash, Algorithm::simhash, Algorithm::bcs, Algorithm::exact}) {
    if (name == to_string(a)) {
      return a;
    }
  }
  if (name == "oracle") {
    return Algorithm::exact;
  }
  return std::nullopt;
}

auto supports(Algorithm a, Measure m) noexcept -> bool {
  switch (a) {
  case Algorithm::binsketch:
  case Algorithm::exact:
    return true;
  case Algorithm::minhash:
    return m == Measure::jaccard;
  case Algorithm::simhash:
    return m == Measure::cosine;
  case Algorithm::bcs:
    return m == Measure::hamming;
  }
  return false;
}

auto coordinates_for(Algorithm a, std::uint32_t sketch_dim, const Options& options) noexcept -> std::uint32_t {
  if (a == Algorithm::minhash && !options.equal_coordinates) {
    return std::max<std::uint32_t>(1, sketch_dim / 64);
  }
  return sketch_dim;
}

struct SketchedCorpus::Impl {
  Algorithm algorithm;
  const Corpus* corpus = nullptr;
  std::optional<SketchConfig> config;
  std::vector<BitSketch> bits;
  std::vector<baselines::MinHashSketch> minhash;
  std::vector<baselines::SimHashSketch> simhash;
  std::vector<baselines::BcsSketch> bcs;
};

namespace {

template <typename Sketch, typename Fn>
auto sketch_each(const Corpus& corpus, unsigned threads, Fn&& fn) -> std::vector<Sketch> {
  std::vector<Sketch> out(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      out[k] = fn(corpus[k]);
    }
  });
  return out;
}

auto binsketch_config(const Corpus& corpus, std::uint32_t sketch_dim, std::uint64_t seed) -> SketchConfig {
  return SketchConfig{corpus.dim(), sketch_dim, seed, std::max<std::uint64_t>(1, corpus.max_count())};
}

} // namespace

SketchedCorpus::SketchedCorpus(const Corpus& corpus, Algorithm algorithm, std::uint32_t sketch_dim,
                               std::uint64_t seed, const Options& options)
    : impl_(std::make_unique<Impl>()) {
  impl_->algorithm = algorithm;
  impl_->corpus = &corpus;
  const std::uint32_t coords = coordinates_for(algorithm, sketch_dim, options);
  switch (algorithm) {
  case Algorithm::binsketch: {
    impl_->config = binsketch_config(corpus, sketch_dim, seed);
    const auto mapping = build_mapping(*impl_->config);
    impl_->bits = sketch_all(corpus.vectors(), mapping, options.threads);
    break;
  }
  case Algorithm::bcs: {
    const auto mapping = build_mapping(binsketch_config(corpus, sketch_dim, seed));
    impl_->bcs = sketch_each<baselines::BcsSketch>(
        corpus, options.threads, [&](const SparseBinaryVector& v) { return baselines::bcs_sketch(v, mapping); });
    break;
  }
  case Algorithm::minhash:
    impl_->minhash = sketch_each<baselines::MinHashSketch>(corpus, options.threads, [&](const SparseBinaryVector& v) {
      return baselines::minhash_sketch(v, coords, seed);
    });
    break;
  case Algorithm::simhash:
    impl_->simhash = sketch_each<baselines::SimHashSketch>(corpus, options.threads, [&](const SparseBinaryVector& v) {
      return baselines::simhash_sketch(v, coords, seed);
    });
    break;
  case Algorithm::exact:
    break;
  }
}

SketchedCorpus::~SketchedCorpus() = default;
SketchedCorpus::SketchedCorpus(SketchedCorpus&&) noexcept = default;
auto SketchedCorpus::operator=(SketchedCorpus&&) noexcept -> SketchedCorpus& = default;

auto SketchedCorpus::algorithm() const noexcept -> Algorithm { return impl_->algorithm; }

auto SketchedCorpus::estimate(std::size_t i, std::size_t j, Measure measure) const -> PairEstimate {
  if (!supports(impl_->algorithm, measure)) {
    throw parameter_error(std::string(to_string(impl_->algorithm)) + " cannot estimate " +
                          std::string(binsketch::to_string(measure)));
  }
  switch (impl_->algorithm) {
  case Algorithm::binsketch: {
    const auto t = estimate_all(impl_->bits[i], impl_->bits[j], *impl_->config);
    double value = 0.0;
    switch (measure) {
    case Measure::inner_product:
      value = t.n_ab;
      break;
    case Measure::hamming:
      value = t.ham_ab;
      break;
    case Measure::jaccard:
      value = t.js_ab;
      break;
    case Measure::cosine:
      value = t.cos_ab;
      break;
    }
    return PairEstimate{value, t.clamped.any()};
  }
  case Algorithm::minhash:
    return PairEstimate{baselines::minhash_estimate_jaccard(impl_->minhash[i], impl_->minhash[j]), false};
  case Algorithm::simhash:
    return PairEstimate{baselines::simhash_estimate_cosine(impl_->simhash[i], impl_->simhash[j]), false};
  case Algorithm::bcs:
    return PairEstimate{baselines::bcs_estimate_hamming(impl_->bcs[i], impl_->bcs[j]), false};
  case Algorithm::exact:
    return PairEstimate{oracle::exact_similarities((*impl_->corpus)[i], (*impl_->corpus)[j]).value(measure), false};
  }
  return {};
}

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] auto value() const noexcept -> double { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Fixed chunking keeps the reduction order independent of the thread count.
constexpr std::size_t pair_chunk = 4096;

void validate(Measure measure, std::span<const Algorithm> algorithms) {
  for (const auto a : algorithms) {
    if (!supports(a, measure)) {
      throw parameter_error(std::string(to_string(a)) + " cannot estimate " + std::string(binsketch::to_string(measure)));
    }
  }
}

} // namespace

auto mean_squared_error(std::span<const double> estimates, std::span<const double> truths) -> double {
  if (estimates.size() != truths.size()) {
    throw dimension_mismatch("estimate and truth lists differ in length");
  }
  if (estimates.empty()) {
    throw parameter_error("mean squared error of an empty list");
  }
  CompensatedSum sum;
  for (std::size_t k = 0; k < estimates.size(); ++k) {
    const double diff = estimates[k] - truths[k];
    sum.add(diff * diff);
  }
  return sum.value() / static_cast<double>(estimates.size());
}

auto run_mse(const Corpus& corpus, Measure measure, std::span<const double> thresholds,
             std::span<const std::uint32_t> sizes, std::span<const std::uint64_t> seeds,
             std::span<const Algorithm> algorithms, const Options& options) -> MseReport {
  validate(measure, algorithms);
  for (const double j : thresholds) {
    const bool similarity = measure == Measure::jaccard || measure == Measure::cosine;
    if (std::isnan(j) || (similarity && (j < 0.0 || j > 1.01)) || (!similarity && j < 0.0)) {
      throw parameter_error("threshold " + std::to_string(j) + " outside the domain of " +
                            std::string(binsketch::to_string(measure)));
    }
  }

  std::vector<std::vector<oracle::PairValue>> pair_sets;
  pair_sets.reserve(thresholds.size());
  for (const double j : thresholds) {
    pair_sets.push_back(oracle::threshold_pairs(corpus, measure, j, options.threads));
  }

  MseReport report;
  for (const auto algorithm : algorithms) {
    for (const auto n : sizes) {
      for (const auto seed : seeds) {
        const SketchedCorpus sketched{corpus, algorithm, n, seed, options};
        for (std::size_t t = 0; t < thresholds.size(); ++t) {
          const auto& pairs = pair_sets[t];
          if (pairs.empty()) {
            continue;
          }
          const std::size_t chunks = (pairs.size() + pair_chunk - 1) / pair_chunk;
          std::vector<double> chunk_sums(chunks, 0.0);
          std::vector<std::size_t> chunk_clamps(chunks, 0);
          parallel_for(chunks, options.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t c = begin; c < end; ++c) {
              CompensatedSum sum;
              std::size_t clamps = 0;
              const std::size_t last = std::min(pairs.size(), (c + 1) * pair_chunk);
              for (std::size_t p = c * pair_chunk; p < last; ++p) {
                const auto est = sketched.estimate(pairs[p].i, pairs[p].j, measure);
                const double diff = est.value - pairs[p].value;
                sum.add(diff * diff);
                clamps += est.clamped ? 1 : 0;
              }
              chunk_sums[c] = sum.value();
              chunk_clamps[c] = clamps;
            }
          });
          CompensatedSum total;
          std::size_t clamps = 0;
          for (std::size_t c = 0; c < chunks; ++c) {
            total.add(chunk_sums[c]);
            clamps += chunk_clamps[c];
          }
          MseRow row;
          row.algorithm = algorithm;
          row.measure = measure;
          row.threshold = thresholds[t];
          row.sketch_dim = n;
          row.seed = seed;
          row.pair_count = pairs.size();
          row.mse = total.value() / static_cast<double>(pairs.size());
          if (measure == Measure::jaccard || measure == Measure::cosine) {
            row.neg_log_mse = -std::log(row.mse);
          }
          row.clamp_rate = static_cast<double>(clamps) / static_cast<double>(pairs.size());
          report.rows.push_back(row);
        }
      }
    }
  }
  return report;
}

auto ranking_metrics(std::span<const std::uint32_t> truth, std::span<const std::uint32_t> retrieved)
    -> RankingMetrics {
  if (truth.empty() && retrieved.empty()) {
    throw parameter_error("ranking metrics are undefined when both result sets are empty");
  }
  std::size_t common = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < truth.size() && y < retrieved.size()) {
    if (truth[x] == retrieved[y]) {
      ++common;
      ++x;
      ++y;
    } else if (truth[x] < retrieved[y]) {
      ++x;
    } else {
      ++y;
    }
  }
  const auto inter = static_cast<double>(common);
  const auto uni = static_cast<double>(truth.size() + retrieved.size() - common);
  RankingMetrics m;
  m.accuracy = inter / uni;
  m.precision = retrieved.empty() ? 0.0 : inter / static_cast<double>(retrieved.size());
  m.recall = truth.empty() ? 0.0 : inter / static_cast<double>(truth.size());
  m.f1 = (m.precision + m.recall) > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
  return m;
}

auto split_queries(std::size_t rows, std::uint64_t split_seed) -> Split {
  if (rows < 2) {
    throw parameter_error("a query/training split needs at least two rows");
  }
  std::vector<std::uint32_t> order(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    order[k] = static_cast<std::uint32_t>(k);
  }
  SplitMix64 rng{split_seed};
  for (std::size_t k = rows; k > 1; --k) {
    std::swap(order[k - 1], order[static_cast<std::size_t>(rng.below(k))]);
  }
  const std::size_t query_count = std::max<std::size_t>(1, rows / 10);
  Split split;
  split.queries.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(query_count));
  split.training.assign(order.begin() + static_cast<std::ptrdiff_t>(query_count), order.end());
  std::sort(split.queries.begin(), split.queries.end());
  std::sort(split.training.begin(), split.training.end());
  return split;
}

auto run_ranking(const Corpus& corpus, Measure measure, std::span<const double> thresholds,
                 std::span<const std::uint32_t> sizes, std::span<const std::uint64_t> seeds,
                 std::span<const Algorithm> algorithms, std::uint64_t split_seed, const Options& options)
    -> RankingReport {
  if (corpus.size() < 10) {
    throw parameter_error("ranking needs at least 10 rows");
  }
  validate(measure, algorithms);
  const Split split = split_queries(corpus.size(), split_seed);
  const std::size_t nq = split.queries.size();
  const std::size_t nt = split.training.size();

  std::vector<double> truth(nq * nt);
  parallel_for(nq, options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t q = begin; q < end; ++q) {
      for (std::size_t t = 0; t < nt; ++t) {
        truth[q * nt + t] =
            oracle::exact_similarities(corpus[split.queries[q]], corpus[split.training[t]]).value(measure);
      }
    }
  });

  RankingReport report;
  std::vector<double> estimated(nq * nt);
  for (const auto algorithm : algorithms) {
    for (const auto n : sizes) {
      for (const auto seed : seeds) {
        const SketchedCorpus sketched{corpus, algorithm, n, seed, options};
        parallel_for(nq, options.threads, [&](std::size_t begin, std::size_t end) {
          for (std::size_t q = begin; q < end; ++q) {
            for (std::size_t t = 0; t < nt; ++t) {
              estimated[q * nt + t] = sketched.estimate(split.queries[q], split.training[t], measure).value;
            }
          }
        });
        for (const double j : thresholds) {
          RankingRow row;
          row.algorithm = algorithm;
          row.measure = measure;
          row.threshold = j;
          row.sketch_dim = n;
          row.seed = seed;
          CompensatedSum acc;
          CompensatedSum prec;
          CompensatedSum rec;
          CompensatedSum f1;
          std::vector<std::uint32_t> o_true;
          std::vector<std::uint32_t> o_est;
          for (std::size_t q = 0; q < nq; ++q) {
            o_true.clear();
            o_est.clear();
            for (std::size_t t = 0; t < nt; ++t) {
              if (passes_threshold(measure, truth[q * nt + t], j)) {
                o_true.push_back(static_cast<std::uint32_t>(t));
              }
              if (passes_threshold(measure, estimated[q * nt + t], j)) {
                o_est.push_back(static_cast<std::uint32_t>(t));
              }
            }
            if (o_true.empty() && o_est.empty()) {
              ++row.skipped_queries;
              continue;
            }
            const auto m = ranking_metrics(o_true, o_est);
            acc.add(m.accuracy);
            prec.add(m.precision);
            rec.add(m.recall);
            f1.add(m.f1);
            ++row.query_count;
          }
          if (row.query_count == 0) {
            continue;
          }
          const auto count = static_cast<double>(row.query_count);
          row.metrics = RankingMetrics{acc.value() / count, prec.value() / count, rec.value() / count,
                                       f1.value() / count};
          report.rows.push_back(row);
        }
      }
    }
  }
  return report;
}

namespace {

using clock_type = std::chrono::steady_clock;

auto seconds_since(clock_type::time_point start) -> double {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

auto median(std::vector<double> values) -> double {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

// Consumed results so the optimizer cannot drop the sketching loops.
volatile std::uint64_t timing_sink = 0;

} // namespace

auto run_timing(const Corpus& corpus, std::span<const std::uint32_t> sizes, std::span<const Algorithm> algorithms,
                std::size_t repetitions, std::uint64_t seed, const Options& options) -> TimingReport {
  if (repetitions < 3) {
    throw parameter_error("timing needs at least 3 repetitions");
  }
  TimingReport report;
  for (const auto algorithm : algorithms) {
    if (algorithm == Algorithm::exact) {
      throw parameter_error("the exact oracle has no compression step to time");
    }
    for (const auto n : sizes) {
      const std::uint32_t coords = coordinates_for(algorithm, n, options);
      std::vector<double> setup_times;
      std::vector<double> sketch_times;
      for (std::size_t r = 0; r < repetitions; ++r) {
        std::uint64_t checksum = 0;
        auto start = clock_type::now();
        std::optional<IndexMapping> mapping;
        if (algorithm == Algorithm::binsketch || algorithm == Algorithm::bcs) {
          mapping.emplace(build_mapping(binsketch_config(corpus, n, seed)));
          checksum += mapping->table().empty() ? 0 : mapping->table().back();
        }
        setup_times.push_back(seconds_since(start));

        start = clock_type::now();
        for (const auto& v : corpus.vectors()) {
          switch (algorithm) {
          case Algorithm::binsketch:
            checksum += sketch(v, *mapping).words()[0];
            break;
          case Algorithm::bcs:
            checksum += baselines::bcs_sketch(v, *mapping).bits.words()[0];
            break;
          case Algorithm::minhash:
            checksum += baselines::minhash_sketch(v, coords, seed).mins[0];
            break;
          case Algorithm::simhash:
            checksum += baselines::simhash_sketch(v, coords, seed).bits.words()[0];
            break;
          case Algorithm::exact:
            break;
          }
        }
        sketch_times.push_back(seconds_since(start));
        timing_sink = timing_sink + checksum;
      }
      TimingRow row;
      row.algorithm = algorithm;
      row.sketch_dim = n;
      row.mapping_setup_seconds = median(setup_times);
      row.sketch_seconds = median(sketch_times);
      row.vectors_per_second =
          row.sketch_seconds > 0.0 ? static_cast<double>(corpus.size()) / row.sketch_seconds : 0.0;
      report.rows.push_back(row);
    }
  }
  return report;
}

} // namespace binsketch::bench
