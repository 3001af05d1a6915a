#include <doctest.h>

#include <array>
#include <algorithm>
#include <cmath>
#include <vector>

#include "binsketch/bench.hpp"
#include "binsketch/bit_sketch.hpp"
#include "binsketch/errors.hpp"
#include "binsketch/estimators.hpp"
#include "binsketch/synthetic.hpp"

using namespace binsketch;
using namespace binsketch::bench;

namespace {

auto small_corpus(std::size_t rows = 120, std::uint64_t seed = 1) -> Corpus {
  return synthetic::clustered_corpus({.rows = rows, .dim = 10'000, .sparsity = 100, .seed = seed});
}

auto same_rows(const MseReport& x, const MseReport& y) -> bool {
  if (x.rows.size() != y.rows.size()) {
    return false;
  }
  for (std::size_t k = 0; k < x.rows.size(); ++k) {
    const auto& a = x.rows[k];
    const auto& b = y.rows[k];
    if (a.algorithm != b.algorithm || a.threshold != b.threshold || a.sketch_dim != b.sketch_dim ||
        a.pair_count != b.pair_count || a.mse != b.mse || a.clamp_rate != b.clamp_rate) {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("mean squared error arithmetic") {
  const std::array<double, 2> estimates{0.9, 0.8};
  const std::array<double, 2> truths{1.0, 1.0};
  const double mse = mean_squared_error(estimates, truths);
  CHECK(mse == doctest::Approx(0.025).epsilon(1e-14));
  CHECK(-std::log(mse) == doctest::Approx(3.6888794541139363).epsilon(1e-12));
  CHECK_THROWS_AS((void)mean_squared_error(estimates, std::array<double, 1>{1.0}), dimension_mismatch);
}

TEST_CASE("algorithm names and support") {
  CHECK(parse_algorithm("oracle") == Algorithm::exact);
  CHECK(parse_algorithm("binsketch") == Algorithm::binsketch);
  CHECK_FALSE(parse_algorithm("lsh").has_value());
  CHECK(supports(Algorithm::minhash, Measure::jaccard));
  CHECK_FALSE(supports(Algorithm::minhash, Measure::cosine));
  CHECK(supports(Algorithm::bcs, Measure::hamming));
  CHECK(supports(Algorithm::binsketch, Measure::inner_product));
  CHECK(coordinates_for(Algorithm::minhash, 1024, {}) == 16);
  CHECK(coordinates_for(Algorithm::minhash, 32, {}) == 1);
  CHECK(coordinates_for(Algorithm::minhash, 1024, {.threads = 1, .equal_coordinates = true}) == 1024);
  CHECK(coordinates_for(Algorithm::simhash, 1024, {}) == 1024);
}

TEST_CASE("ranking metrics") {
  const std::vector<std::uint32_t> truth{1, 2, 3};
  const std::vector<std::uint32_t> retrieved{2, 3, 4};
  const auto m = ranking_metrics(truth, retrieved);
  CHECK(m.accuracy == 0.5);
  CHECK(m.precision == doctest::Approx(2.0 / 3.0));
  CHECK(m.recall == doctest::Approx(2.0 / 3.0));
  CHECK(m.f1 == doctest::Approx(2.0 / 3.0));

  const auto same = ranking_metrics(truth, truth);
  CHECK(same.accuracy == 1.0);
  CHECK(same.precision == 1.0);
  CHECK(same.recall == 1.0);
  CHECK(same.f1 == 1.0);

  const auto none = ranking_metrics(truth, {});
  CHECK(none.precision == 0.0);
  CHECK(none.recall == 0.0);
  CHECK(none.f1 == 0.0);
}

TEST_CASE("query split") {
  const auto s = split_queries(100, 7);
  CHECK(s.queries.size() == 10);
  CHECK(s.training.size() == 90);
  CHECK(std::is_sorted(s.queries.begin(), s.queries.end()));
  const auto again = split_queries(100, 7);
  CHECK(again.queries == s.queries);
  CHECK(split_queries(12, 1).queries.size() == 1);
}

TEST_CASE("the exact oracle as an algorithm is perfect") {
  const auto corpus = small_corpus(60);
  const std::array<std::uint32_t, 2> sizes{256, 1024};
  const std::array<std::uint64_t, 1> seeds{1};
  const std::array<Algorithm, 1> algos{Algorithm::exact};
  for (const auto m : {Measure::jaccard, Measure::cosine, Measure::hamming}) {
    const auto thresholds = m == Measure::hamming ? std::vector<double>{20.0, 80.0}
                                                  : std::vector<double>(std::begin(default_thresholds),
                                                                        std::end(default_thresholds));
    const auto mse = run_mse(corpus, m, thresholds, sizes, seeds, algos);
    REQUIRE_FALSE(mse.rows.empty());
    for (const auto& row : mse.rows) {
      CHECK(row.mse == 0.0);
      CHECK(row.pair_count > 0);
    }
    const auto ranking = run_ranking(corpus, m, thresholds, sizes, seeds, algos, 7);
    REQUIRE_FALSE(ranking.rows.empty());
    for (const auto& row : ranking.rows) {
      CHECK(row.metrics.accuracy == 1.0);
      CHECK(row.metrics.precision == 1.0);
      CHECK(row.metrics.recall == 1.0);
      CHECK(row.metrics.f1 == 1.0);
    }
  }
}

TEST_CASE("mse rows") {
  const auto corpus = small_corpus(80);
  const std::array<double, 2> thresholds{0.9, 0.5};
  const std::array<std::uint32_t, 1> sizes{512};
  const std::array<std::uint64_t, 2> seeds{1, 2};
  const std::array<Algorithm, 2> algos{Algorithm::binsketch, Algorithm::minhash};
  const auto report = run_mse(corpus, Measure::jaccard, thresholds, sizes, seeds, algos);
  CHECK(report.rows.size() == 2 * 2 * 2);
  for (const auto& row : report.rows) {
    CHECK(row.mse >= 0.0);
    REQUIRE(row.neg_log_mse.has_value());
    CHECK(*row.neg_log_mse == doctest::Approx(-std::log(row.mse)));
    CHECK(row.clamp_rate >= 0.0);
    CHECK(row.clamp_rate <= 1.0);
  }
  const std::array<double, 1> ip_thresholds{10.0};
  const auto ip = run_mse(corpus, Measure::inner_product, ip_thresholds, sizes, seeds,
                          std::array<Algorithm, 1>{Algorithm::binsketch});
  REQUIRE_FALSE(ip.rows.empty());
  CHECK_FALSE(ip.rows.front().neg_log_mse.has_value());

  // Disjoint rows: no pair reaches 0.5, so that threshold produces no row.
  const Corpus disjoint{100, {SparseBinaryVector{100, {0, 1}}, SparseBinaryVector{100, {2, 3}},
                              SparseBinaryVector{100, {3, 4, 5}}}};
  const auto sparse = run_mse(disjoint, Measure::jaccard, thresholds, sizes, seeds, algos);
  CHECK(sparse.rows.empty());

  CHECK_THROWS_AS((void)run_mse(corpus, Measure::jaccard, std::array<double, 1>{2.0}, sizes, seeds, algos),
                  parameter_error);
  CHECK_THROWS_AS((void)run_mse(corpus, Measure::cosine, thresholds, sizes, seeds,
                                std::array<Algorithm, 1>{Algorithm::minhash}),
                  parameter_error);
}

TEST_CASE("reports do not depend on the thread count") {
  const auto corpus = small_corpus(150);
  const std::array<std::uint32_t, 2> sizes{256, 2048};
  const std::array<std::uint64_t, 2> seeds{3, 4};
  const std::array<Algorithm, 4> algos{Algorithm::binsketch, Algorithm::minhash, Algorithm::simhash, Algorithm::bcs};
  for (const auto m : {Measure::jaccard, Measure::cosine, Measure::hamming}) {
    const std::vector<double> thresholds = m == Measure::hamming ? std::vector<double>{50.0, 150.0}
                                                                 : std::vector<double>{0.8, 0.2};
    std::vector<Algorithm> usable;
    for (const auto a : algos) {
      if (supports(a, m)) {
        usable.push_back(a);
      }
    }
    const auto one = run_mse(corpus, m, thresholds, sizes, seeds, usable, {.threads = 1});
    const auto many = run_mse(corpus, m, thresholds, sizes, seeds, usable, {.threads = 4});
    CHECK(same_rows(one, many));

    const auto r1 = run_ranking(corpus, m, thresholds, sizes, seeds, usable, 7, {.threads = 1});
    const auto r4 = run_ranking(corpus, m, thresholds, sizes, seeds, usable, 7, {.threads = 4});
    REQUIRE(r1.rows.size() == r4.rows.size());
    for (std::size_t k = 0; k < r1.rows.size(); ++k) {
      CHECK(r1.rows[k].metrics.f1 == r4.rows[k].metrics.f1);
      CHECK(r1.rows[k].metrics.accuracy == r4.rows[k].metrics.accuracy);
      CHECK(r1.rows[k].query_count == r4.rows[k].query_count);
    }
  }
}

TEST_CASE("regression baseline: jaccard mse over 200 pairs at N = 1224") {
  // 200 pairs with |a| = |b| = 100, overlaps cycling through 0..100, one shared mapping (seed 1).
  constexpr std::array<std::size_t, 5> overlaps{0, 25, 50, 75, 100};
  SplitMix64 rng{1};
  const SketchConfig config{10'000, 1224, 1, 100};
  const auto mapping = build_mapping(config);
  std::vector<double> estimates;
  std::vector<double> truths;
  for (std::size_t p = 0; p < 200; ++p) {
    const auto [a, b] = synthetic::random_pair(10'000, 100, 100, overlaps[p % 5], rng);
    estimates.push_back(estimate_jaccard(sketch(a, mapping), sketch(b, mapping), config));
    truths.push_back(oracle::exact_similarities(a, b).jaccard);
  }
  const double mse = mean_squared_error(estimates, truths);
  // Recorded on the first run against the exact oracle.
  CHECK(mse == doctest::Approx(0.00016865051922073109).epsilon(1e-9));
}

TEST_CASE("regression baseline: ranking at J = 0.9, N = 4096") {
  const auto corpus = small_corpus(100);
  const std::array<double, 1> thresholds{0.9};
  const std::array<std::uint32_t, 1> sizes{4096};
  const std::array<std::uint64_t, 1> seeds{1};
  const auto report =
      run_ranking(corpus, Measure::jaccard, thresholds, sizes, seeds, std::array<Algorithm, 1>{Algorithm::binsketch}, 7);
  REQUIRE(report.rows.size() == 1);
  const auto& row = report.rows.front();
  // Recorded on the first run: 3 of the 10 queries have a near-duplicate at
  // J >= 0.9 and the sketch retrieves exactly those; the other 7 are skipped.
  CHECK(row.query_count == 3);
  CHECK(row.skipped_queries == 7);
  CHECK(row.metrics.accuracy == 1.0);
  CHECK(row.metrics.precision == 1.0);
  CHECK(row.metrics.recall == 1.0);
  CHECK(row.metrics.f1 == 1.0);
}

TEST_CASE("timing smoke and linearity") {
  const auto corpus = synthetic::clustered_corpus({.rows = 2000, .dim = 100'000, .sparsity = 100, .seed = 2});
  const auto doubled = synthetic::clustered_corpus({.rows = 4000, .dim = 100'000, .sparsity = 100, .seed = 2});
  const std::array<std::uint32_t, 1> sizes{1000};
  const std::array<Algorithm, 1> algos{Algorithm::binsketch};
  const auto base = run_timing(corpus, sizes, algos, 5);
  const auto twice = run_timing(doubled, sizes, algos, 5);
  REQUIRE(base.rows.size() == 1);
  const auto& row = base.rows.front();
  CHECK(row.mapping_setup_seconds >= 0.0);
  CHECK(row.sketch_seconds > 0.0);
  CHECK(row.vectors_per_second > 0.0);
  const double ratio = twice.rows.front().sketch_seconds / row.sketch_seconds;
  MESSAGE("sketch time ratio for doubled corpus = " << ratio);
  CHECK(ratio >= 1.0);
  CHECK(ratio <= 3.0);
  CHECK_THROWS_AS((void)run_timing(corpus, sizes, algos, 2), parameter_error);
  CHECK_THROWS_AS((void)run_timing(corpus, sizes, std::array<Algorithm, 1>{Algorithm::exact}, 3), parameter_error);
}
