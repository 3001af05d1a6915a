#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <thread>
#include <vector>

#include "binsketch/bit_sketch.hpp"
#include "binsketch/errors.hpp"
#include "binsketch/index_mapping.hpp"
#include "binsketch/sketch_config.hpp"
#include "binsketch/sparse_vector.hpp"
#include "binsketch/synthetic.hpp"

using namespace binsketch;

namespace {

auto vec(std::size_t dim, std::vector<index_t> support) -> SparseBinaryVector {
  return SparseBinaryVector{dim, std::move(support)};
}

auto alternating_mapping() -> IndexMapping {
  return IndexMapping::from_table(SketchConfig{4, 2, 0}, {0, 1, 0, 1});
}

// Naive dense reference: materialize a, then OR bit i into bucket pi(i).
auto dense_sketch(const SparseBinaryVector& v, const IndexMapping& m) -> std::vector<bool> {
  std::vector<bool> dense(v.dim(), false);
  for (const auto i : v.support()) {
    dense[i] = true;
  }
  std::vector<bool> out(m.config().sketch_dim(), false);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i]) {
      out[m(static_cast<index_t>(i))] = true;
    }
  }
  return out;
}

} // namespace

TEST_CASE("sparse vector validates its support") {
  CHECK_NOTHROW(vec(5, {0, 2, 4}));
  CHECK_THROWS_AS(vec(5, {0, 5}), parameter_error);
  CHECK_THROWS_AS(vec(5, {2, 1}), parameter_error);
  CHECK_THROWS_AS(vec(5, {1, 1}), parameter_error);
  CHECK_THROWS_AS(vec(0, {}), parameter_error);

  const auto v = SparseBinaryVector::from_indices(10, {7, 3, 7, 1});
  CHECK(std::vector<index_t>(v.support().begin(), v.support().end()) == std::vector<index_t>{1, 3, 7});
  CHECK(v.count() == 3);
  CHECK(v.contains(3));
  CHECK_FALSE(v.contains(4));
}

TEST_CASE("recommended sketch size follows the closed form") {
  // Expected values from an independent double-precision evaluation:
  // 100*sqrt(50 ln 20) = 1223.88..., 20*sqrt(10 ln 20) = 109.47...
  CHECK(recommended_sketch_size(100, 0.1) == 1224);
  CHECK(recommended_sketch_size(20, 0.1) == 110);
  CHECK(recommended_sketch_size(1, 0.999) == 2);

  CHECK_THROWS_AS((void)recommended_sketch_size(0, 0.1), parameter_error);
  CHECK_THROWS_AS((void)recommended_sketch_size(10, 0.0), parameter_error);
  CHECK_THROWS_AS((void)recommended_sketch_size(10, 1.0), parameter_error);
  CHECK_THROWS_AS((void)recommended_sketch_size(10, -0.5), parameter_error);
}

TEST_CASE("sketch config") {
  CHECK_THROWS_AS(SketchConfig(10, 1, 0), parameter_error);
  CHECK_THROWS_AS(SketchConfig(0, 16, 0), parameter_error);
  CHECK_THROWS_AS(SketchConfig(10, 16, 0, 0), parameter_error);

  const SketchConfig c{100, 1224, 9, 100};
  CHECK(c.shrink_factor() == 1.0 - 1.0 / 1224.0);
  CHECK(c.shrink_factor() > 0.0);
  CHECK(c.shrink_factor() < 1.0);
  CHECK(SketchConfig(10, 2, 0).shrink_factor() == 0.5);
}

TEST_CASE("seeded mapping matches the golden vector") {
  // Evaluated independently from the splitmix64 recipe in a standalone script.
  const auto m = build_mapping(SketchConfig{8, 16, 0});
  const std::vector<std::uint32_t> golden{15, 4, 15, 12, 11, 10, 1, 12};
  CHECK(std::vector<std::uint32_t>(m.table().begin(), m.table().end()) == golden);

  const auto m42 = build_mapping(SketchConfig{10, 1000, 42});
  const std::vector<std::uint32_t> golden42{413, 291, 858, 764, 250, 62, 925, 908, 5, 974};
  CHECK(std::vector<std::uint32_t>(m42.table().begin(), m42.table().end()) == golden42);
  CHECK(m42.kind() == IndexMapping::Kind::seeded);
}

TEST_CASE("seeded mapping is deterministic and in range") {
  for (std::uint64_t seed : {0ULL, 1ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    const auto a = build_mapping(SketchConfig{500, 2, seed});
    const auto b = build_mapping(SketchConfig{500, 2, seed});
    CHECK(std::vector<std::uint32_t>(a.table().begin(), a.table().end()) ==
          std::vector<std::uint32_t>(b.table().begin(), b.table().end()));
    for (const auto bucket : a.table()) {
      CHECK(bucket < 2);
    }
  }
  // pi(i) depends only on (seed, i, N): a longer input dimension extends the table.
  const auto shorter = build_mapping(SketchConfig{50, 97, 5});
  const auto longer = build_mapping(SketchConfig{80, 97, 5});
  for (index_t i = 0; i < 50; ++i) {
    CHECK(shorter(i) == longer(i));
  }
}

TEST_CASE("explicit mapping table") {
  const auto m = alternating_mapping();
  CHECK(m.kind() == IndexMapping::Kind::explicit_table);
  CHECK(m(2) == 0);
  CHECK(m(3) == 1);
  CHECK_THROWS_AS((void)IndexMapping::from_table(SketchConfig{4, 2, 0}, {0, 1, 2, 1}), parameter_error);
  CHECK_THROWS_AS((void)IndexMapping::from_table(SketchConfig{4, 2, 0}, {0, 1}), dimension_mismatch);
}

TEST_CASE("sketch follows the OR definition on forced collisions") {
  const auto m = alternating_mapping();

  const auto empty = sketch(vec(4, {}), m);
  CHECK(popcount(empty) == 0);

  const auto s02 = sketch(vec(4, {0, 2}), m);
  CHECK(s02.test(0));
  CHECK_FALSE(s02.test(1));
  CHECK(popcount(s02) == 1);

  const auto all = sketch(vec(4, {0, 1, 2, 3}), m);
  CHECK(all.set_bits() == std::vector<std::uint32_t>{0, 1});
  CHECK(popcount(all) == 2);

  CHECK_THROWS_AS((void)sketch(vec(5, {0}), m), dimension_mismatch);
}

TEST_CASE("popcount and and_popcount") {
  BitSketch zeros{64};
  CHECK(popcount(zeros) == 0);
  BitSketch ones{64};
  for (std::uint32_t j = 0; j < 64; ++j) {
    ones.set(j);
  }
  CHECK(popcount(ones) == 64);

  BitSketch x{70};
  BitSketch y{70};
  x.set(0);
  x.set(1);
  y.set(1);
  y.set(2);
  CHECK(and_popcount(x, y) == 1);
  CHECK(and_popcount(y, x) == 1);
  CHECK(and_popcount(x, x) == popcount(x));
  CHECK(or_popcount(x, y) == 3);
  CHECK(xor_popcount(x, y) == 2);

  BitSketch z{70};
  z.set(69);
  CHECK(and_popcount(x, z) == 0);
  CHECK_THROWS_AS((void)and_popcount(x, BitSketch{64}), dimension_mismatch);
}

TEST_CASE("sketch invariants on random instances") {
  SplitMix64 rng{2024};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + rng.below(64);
    const auto n = static_cast<std::uint32_t>(2 + rng.below(40));
    const SketchConfig config{d, n, rng.next()};
    const auto mapping = build_mapping(config);
    const auto a = synthetic::random_vector(d, rng.below(d + 1), rng);
    const auto b = synthetic::random_vector(d, rng.below(d + 1), rng);
    const auto sa = sketch(a, mapping);
    const auto sb = sketch(b, mapping);

    // Definitional equivalence with the dense reference.
    const auto dense = dense_sketch(a, mapping);
    for (std::uint32_t j = 0; j < n; ++j) {
      REQUIRE(sa.test(j) == dense[j]);
    }
    // OR-homomorphism.
    CHECK(sketch(set_union(a, b), mapping) == (sa | sb));
    // Monotonicity: a subset of a union sets a subset of bits.
    const auto su = sketch(set_union(a, b), mapping);
    CHECK(and_popcount(sa, su) == popcount(sa));
    // Cardinality cap.
    CHECK(popcount(sa) <= std::min<std::size_t>(n, a.count()));
    // and_popcount bounds.
    CHECK(and_popcount(sa, sb) <= std::min(popcount(sa), popcount(sb)));
  }
}

TEST_CASE("sketch_all is independent of the thread count") {
  const auto corpus = synthetic::clustered_corpus({.rows = 300, .dim = 5000, .sparsity = 60, .seed = 3});
  const auto mapping = build_mapping(SketchConfig{corpus.dim(), 333, 17});
  const auto serial = sketch_all(corpus.vectors(), mapping, 1);
  const auto parallel = sketch_all(corpus.vectors(), mapping, 4);
  CHECK(serial == parallel);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    REQUIRE(serial[k] == sketch(corpus[k], mapping));
  }
}

TEST_CASE("BSK1 layout") {
  BitSketch s{70};
  s.set(0);
  s.set(65);
  std::ostringstream os;
  write_bsk1(os, s, 0x0102030405060708ULL);
  const std::string bytes = os.str();
  REQUIRE(bytes.size() == 4 + 4 + 8 + 2 * 8);
  CHECK(bytes.substr(0, 4) == "BSK1");
  CHECK(static_cast<unsigned char>(bytes[4]) == 70);
  CHECK(bytes[5] == 0);
  CHECK(static_cast<unsigned char>(bytes[8]) == 0x08);   // seed, little-endian
  CHECK(static_cast<unsigned char>(bytes[15]) == 0x01);
  CHECK(static_cast<unsigned char>(bytes[16]) == 0x01);  // word 0, bit 0
  CHECK(static_cast<unsigned char>(bytes[24]) == 0x02);  // word 1, bit 65 - 64

  std::istringstream is(bytes);
  const auto rec = read_bsk1(is);
  REQUIRE(rec.has_value());
  CHECK(rec->seed == 0x0102030405060708ULL);
  CHECK(rec->bits == s);
  CHECK_FALSE(read_bsk1(is).has_value());
}

TEST_CASE("BSK1 round trip and corruption") {
  SplitMix64 rng{11};
  std::ostringstream os;
  std::vector<BitSketch> written;
  for (int k = 0; k < 20; ++k) {
    BitSketch s{static_cast<std::uint32_t>(2 + rng.below(300))};
    for (std::uint32_t j = 0; j < s.sketch_dim(); ++j) {
      if (rng.below(3) == 0) {
        s.set(j);
      }
    }
    write_bsk1(os, s, 5);
    written.push_back(s);
  }
  std::istringstream is(os.str());
  std::vector<BitSketch> read;
  while (auto rec = read_bsk1(is)) {
    read.push_back(rec->bits);
  }
  CHECK(read == written);

  std::istringstream truncated(os.str().substr(0, 30));
  CHECK_THROWS_AS((void)read_bsk1(truncated), format_error);
  std::istringstream wrong("MNH1xxxxxxxxxxxx");
  CHECK_THROWS_AS((void)read_bsk1(wrong), format_error);
  // Padding bits past N are rejected.
  CHECK_THROWS_AS(BitSketch(3, {0xFFULL}), format_error);
}
