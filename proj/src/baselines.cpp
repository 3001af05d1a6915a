#include "binsketch/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "binsketch/binary_io.hpp"
#include "binsketch/errors.hpp"

namespace binsketch::baselines {

auto minhash_sketch(const SparseBinaryVector& v, std::uint32_t k, std::uint64_t seed) -> MinHashSketch {
  if (k == 0) {
    throw parameter_error("MinHash needs at least one hash function");
  }
  MinHashSketch out{seed, std::vector<std::uint64_t>(k, empty_min)};
  for (std::uint32_t j = 0; j < k; ++j) {
    const std::uint64_t key = coordinate_key(seed, j);
    std::uint64_t best = empty_min;
    for (const auto i : v.support()) {
      best = std::min(best, keyed_index_hash(key, i));
    }
    out.mins[j] = best;
  }
  return out;
}

auto minhash_estimate_jaccard(const MinHashSketch& x, const MinHashSketch& y) -> double {
  if (x.k() != y.k() || x.seed != y.seed) {
    throw dimension_mismatch("MinHash sketches built with different k or seed");
  }
  if (x.k() == 0) {
    throw parameter_error("empty MinHash sketch");
  }
  std::uint32_t agree = 0;
  for (std::uint32_t j = 0; j < x.k(); ++j) {
    agree += x.mins[j] == y.mins[j] ? 1U : 0U;
  }
  return static_cast<double>(agree) / static_cast<double>(x.k());
}

auto simhash_sketch(const SparseBinaryVector& v, std::uint32_t k, std::uint64_t seed) -> SimHashSketch {
  if (k == 0) {
    throw parameter_error("SimHash needs at least one hyperplane");
  }
  SimHashSketch out{seed, BitSketch{k}};
  for (std::uint32_t j = 0; j < k; ++j) {
    const std::uint64_t key = coordinate_key(seed, j);
    std::int64_t projection = 0;
    for (const auto i : v.support()) {
      projection += (keyed_index_hash(key, i) >> 63) != 0 ? 1 : -1;
    }
    if (projection >= 0) {
      out.bits.set(j);
    }
  }
  return out;
}

auto simhash_collision_rate(const SimHashSketch& x, const SimHashSketch& y) -> double {
  if (x.k() != y.k() || x.seed != y.seed) {
    throw dimension_mismatch("SimHash sketches built with different k or seed");
  }
  const auto differing = xor_popcount(x.bits, y.bits);
  return 1.0 - static_cast<double>(differing) / static_cast<double>(x.k());
}

auto simhash_estimate_cosine(const SimHashSketch& x, const SimHashSketch& y) -> double {
  return std::cos(std::numbers::pi * (1.0 - simhash_collision_rate(x, y)));
}

auto bcs_sketch(const SparseBinaryVector& v, const IndexMapping& mapping) -> BcsSketch {
  const auto& config = mapping.config();
  if (v.dim() != config.input_dim()) {
    throw dimension_mismatch("vector dimension " + std::to_string(v.dim()) + " != mapping input dimension " +
                             std::to_string(config.input_dim()));
  }
  BcsSketch out{config.seed(), config.input_dim(), BitSketch{config.sketch_dim()}};
  const auto table = mapping.table();
  for (const auto i : v.support()) {
    out.bits.flip(table[i]);
  }
  return out;
}

auto bcs_estimate_hamming(const BcsSketch& x, const BcsSketch& y) -> double {
  if (x.n_buckets() != y.n_buckets() || x.seed != y.seed || x.input_dim != y.input_dim) {
    throw dimension_mismatch("BCS sketches built with different buckets, seed or dimension");
  }
  const auto m = static_cast<double>(xor_popcount(x.bits, y.bits));
  const auto n = static_cast<double>(x.n_buckets());
  const auto cap = static_cast<double>(x.input_dim);
  if (m == 0.0) {
    return 0.0;
  }
  if (2.0 * m >= n) {
    return cap;
  }
  const double estimate = std::log(1.0 - 2.0 * m / n) / std::log(1.0 - 2.0 / n);
  return std::clamp(estimate, 0.0, cap);
}

void write_mnh1(std::ostream& os, const MinHashSketch& s) {
  io::write_magic(os, mnh1_magic);
  io::write_u32(os, s.k());
  io::write_u64(os, s.seed);
  for (const auto v : s.mins) {
    io::write_u64(os, v);
  }
}

auto read_mnh1(std::istream& is) -> std::optional<MinHashSketch> {
  if (!io::read_magic(is, mnh1_magic)) {
    return std::nullopt;
  }
  const std::uint32_t k = io::read_u32(is);
  MinHashSketch s{io::read_u64(is), std::vector<std::uint64_t>(k)};
  for (auto& v : s.mins) {
    v = io::read_u64(is);
  }
  return s;
}

void write_smh1(std::ostream& os, const SimHashSketch& s) { write_packed_record(os, smh1_magic, s.bits, s.seed); }

auto read_smh1(std::istream& is) -> std::optional<SimHashSketch> {
  auto rec = read_packed_record(is, smh1_magic);
  if (!rec) {
    return std::nullopt;
  }
  return SimHashSketch{rec->seed, std::move(rec->bits)};
}

void write_bcs1(std::ostream& os, const BcsSketch& s) { write_packed_record(os, bcs1_magic, s.bits, s.seed); }

auto read_bcs1(std::istream& is, std::uint64_t input_dim) -> std::optional<BcsSketch> {
  auto rec = read_packed_record(is, bcs1_magic);
  if (!rec) {
    return std::nullopt;
  }
  return BcsSketch{rec->seed, input_dim, std::move(rec->bits)};
}

} // namespace binsketch::baselines
