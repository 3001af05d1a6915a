#include <doctest.h>

#include <cmath>
#include <vector>

#include "binsketch/bit_sketch.hpp"
#include "binsketch/errors.hpp"
#include "binsketch/estimators.hpp"
#include "binsketch/index_mapping.hpp"
#include "binsketch/synthetic.hpp"
#include "ensemble.hpp"

using namespace binsketch;

namespace {

auto identity4() -> IndexMapping { return IndexMapping::from_table(SketchConfig{4, 4, 0}, {0, 1, 2, 3}); }

auto sketch_of(std::vector<index_t> support, const IndexMapping& m) -> BitSketch {
  return sketch(SparseBinaryVector{m.config().input_dim(), std::move(support)}, m);
}

auto with_bits(std::uint32_t n, std::uint32_t count) -> BitSketch {
  BitSketch s{n};
  for (std::uint32_t j = 0; j < count; ++j) {
    s.set(j);
  }
  return s;
}

} // namespace

TEST_CASE("cardinality estimate") {
  CHECK(estimate_cardinality(BitSketch{64}, SketchConfig{100, 64, 0}) == 0.0);
  CHECK(estimate_cardinality(with_bits(2, 1), SketchConfig{10, 2, 0}) == 1.0);
  // ln(1 - 95/1224) / ln(1 - 1/1224), evaluated independently.
  CHECK(estimate_cardinality(with_bits(1224, 95), SketchConfig{100, 1224, 0}) ==
        doctest::Approx(98.84888282902695).epsilon(1e-12));
  // Saturation caps at the input dimension.
  CHECK(estimate_cardinality(with_bits(16, 16), SketchConfig{500, 16, 0}) == 500.0);
  CHECK_THROWS_AS((void)estimate_cardinality(BitSketch{8}, SketchConfig{10, 16, 0}), dimension_mismatch);
}

TEST_CASE("cardinality estimate is strictly increasing below saturation") {
  const SketchConfig config{5000, 300, 0};
  double previous = -1.0;
  for (std::uint32_t c = 0; c < 300; ++c) {
    const double v = estimate_cardinality(with_bits(300, c), config);
    CHECK(v > previous);
    CHECK(v >= static_cast<double>(c));
    previous = v;
  }
}

TEST_CASE("inner product on the four-bucket worked examples") {
  const auto m = identity4();
  const SketchConfig& config = m.config();

  const auto trace = estimate_all(sketch_of({0}, m), sketch_of({1}, m), config);
  CHECK(trace.n_a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(trace.n_b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(trace.n_ab == 0.0);
  CHECK(trace.clamped.inner_product_low);
  CHECK(trace.ham_ab == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(trace.js_ab == 0.0);
  CHECK(trace.cos_ab == 0.0);

  // arg = 0.25 = n^(n_a + n_b) so the raw value is zero (true IP is 1).
  const double ip = estimate_inner_product(sketch_of({0, 1}, m), sketch_of({1, 2}, m), config);
  CHECK(ip == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("self-similarity is exact") {
  SplitMix64 rng{77};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1000;
    const auto n = static_cast<std::uint32_t>(2 + rng.below(2000));
    const SketchConfig config{d, n, rng.next()};
    const auto mapping = build_mapping(config);
    const auto a = synthetic::random_vector(d, 1 + rng.below(300), rng);
    const auto s = sketch(a, mapping);
    const auto t = estimate_all(s, s, config);
    CHECK(t.n_ab == t.n_a);
    CHECK(t.ham_ab == 0.0);
    CHECK(t.js_ab == 1.0);
    CHECK(t.cos_ab == 1.0);
  }
}

TEST_CASE("empty-set conventions") {
  const SketchConfig config{100, 64, 0};
  const BitSketch empty{64};
  const auto both = estimate_all(empty, empty, config);
  CHECK(both.n_ab == 0.0);
  CHECK(both.ham_ab == 0.0);
  CHECK(both.js_ab == 1.0);
  CHECK(both.cos_ab == 0.0);

  const auto full = with_bits(64, 10);
  const double c = estimate_cardinality(full, config);
  CHECK(estimate_hamming(empty, full, config) == doctest::Approx(c));
  CHECK(estimate_hamming(full, empty, config) == doctest::Approx(c));
  CHECK(estimate_inner_product(empty, full, config) == 0.0);
  CHECK(estimate_jaccard(empty, full, config) == 0.0);
  CHECK(estimate_cosine(empty, full, config) == 0.0);
}

TEST_CASE("trace agrees with the single-measure functions and stays in range") {
  SplitMix64 rng{5};
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 2000;
    const auto n = static_cast<std::uint32_t>(2 + rng.below(400));
    const SketchConfig config{d, n, rng.next()};
    const auto mapping = build_mapping(config);
    const auto size_a = rng.below(200);
    const auto size_b = rng.below(200);
    const auto overlap = rng.below(std::min(size_a, size_b) + 1);
    const auto [a, b] = synthetic::random_pair(d, size_a, size_b, overlap, rng);
    const auto x = sketch(a, mapping);
    const auto y = sketch(b, mapping);
    const auto t = estimate_all(x, y, config);

    CHECK(t.n_as == popcount(x));
    CHECK(t.n_bs == popcount(y));
    CHECK(t.n_asbs == and_popcount(x, y));
    CHECK(t.n_a == estimate_cardinality(x, config));
    CHECK(t.n_b == estimate_cardinality(y, config));
    CHECK(t.n_ab == estimate_inner_product(x, y, config));
    CHECK(t.ham_ab == estimate_hamming(x, y, config));
    CHECK(t.js_ab == estimate_jaccard(x, y, config));
    CHECK(t.cos_ab == estimate_cosine(x, y, config));

    CHECK(t.n_ab >= 0.0);
    CHECK(t.n_ab <= std::min(t.n_a, t.n_b));
    CHECK(t.ham_ab >= 0.0);
    CHECK(t.ham_ab <= t.n_a + t.n_b + 1e-9);
    CHECK(t.js_ab >= 0.0);
    CHECK(t.js_ab <= 1.0);
    CHECK(t.cos_ab >= 0.0);
    CHECK(t.cos_ab <= 1.0);
    if (t.n_as > 0 && t.n_bs > 0 && t.n_a + t.n_b - t.n_ab > 0) {
      CHECK(t.js_ab == doctest::Approx(t.n_ab / (t.n_a + t.n_b - t.n_ab)));
      CHECK(t.cos_ab == doctest::Approx(t.n_ab / std::sqrt(t.n_a * t.n_b)));
    }
    CHECK(t.ham_ab == doctest::Approx(std::max(0.0, t.n_a + t.n_b - 2.0 * t.n_ab)));
  }
}

TEST_CASE("swapping the arguments does not change the estimate") {
  SplitMix64 rng{9};
  const SketchConfig config{3000, 500, 3};
  const auto mapping = build_mapping(config);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [a, b] = synthetic::random_pair(3000, 80, 120, rng.below(80), rng);
    const auto x = sketch(a, mapping);
    const auto y = sketch(b, mapping);
    CHECK(estimate_inner_product(x, y, config) == estimate_inner_product(y, x, config));
    CHECK(estimate_jaccard(x, y, config) == estimate_jaccard(y, x, config));
  }
}

TEST_CASE("concentration at the recommended sketch size") {
  // psi = 100, rho = 0.1 gives N = 1224. Bounds 4*sqrt(50 ln 20) and 14*sqrt(50 ln 20).
  const auto outcomes = testing::concentration_ensemble(400, 10'000, 100, 1224, 101);
  std::size_t card_misses = 0;
  std::size_t ip_misses = 0;
  double signed_ip_error = 0.0;
  for (const auto& o : outcomes) {
    card_misses += std::abs(o.trace.n_a - static_cast<double>(o.size_a)) >= 48.954936613616326 ? 1 : 0;
    ip_misses += std::abs(o.trace.n_ab - static_cast<double>(o.true_ip)) >= 171.34227814765714 ? 1 : 0;
    signed_ip_error += o.trace.n_ab - static_cast<double>(o.true_ip);
  }
  CHECK(static_cast<double>(card_misses) / outcomes.size() <= 0.1);
  CHECK(static_cast<double>(ip_misses) / outcomes.size() <= 0.3);
  // Mean signed error: the estimator is nearly unbiased at this size.
  CHECK(std::abs(signed_ip_error / outcomes.size()) < 3.0);
}

TEST_CASE("saturated sketches") {
  const SketchConfig config{1000, 8, 0};
  const auto full = with_bits(8, 8);
  const auto part = with_bits(8, 3);
  const auto both = estimate_all(full, full, config);
  CHECK(both.clamped.saturated_a);
  CHECK(both.n_ab == 1000.0);
  CHECK(both.ham_ab == 0.0);
  CHECK(both.js_ab == 1.0);

  // One full side: the argument collapses to n^{n_full} and the estimate is the smaller cardinality.
  const auto mixed = estimate_all(full, part, config);
  CHECK(mixed.n_ab == doctest::Approx(estimate_cardinality(part, config)));
  CHECK(mixed.ham_ab == doctest::Approx(1000.0 - mixed.n_b));
}
