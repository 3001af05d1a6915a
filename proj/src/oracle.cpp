#include "binsketch/oracle.hpp"

#include <cmath>
#include <iomanip>
#include <string>

#include "binsketch/errors.hpp"
#include "binsketch/parallel.hpp"

namespace binsketch {

auto to_string(Measure m) -> std::string_view {
  switch (m) {
  case Measure::inner_product:
    return "ip";
  case Measure::hamming:
    return "hamming";
  case Measure::jaccard:
    return "jaccard";
  case Measure::cosine:
    return "cosine";
  }
  return "unknown";
}

auto parse_measure(std::string_view name) -> std::optional<Measure> {
  if (name == "ip" || name == "inner_product") {
    return Measure::inner_product;
  }
  if (name == "hamming") {
    return Measure::hamming;
  }
  if (name == "jaccard") {
    return Measure::jaccard;
  }
  if (name == "cosine") {
    return Measure::cosine;
  }
  return std::nullopt;
}

} // namespace binsketch

namespace binsketch::oracle {

auto ExactSimilarities::value(Measure m) const noexcept -> double {
  switch (m) {
  case Measure::inner_product:
    return static_cast<double>(ip);
  case Measure::hamming:
    return static_cast<double>(hamming);
  case Measure::jaccard:
    return jaccard;
  case Measure::cosine:
    return cosine;
  }
  return 0.0;
}

auto exact_similarities(const SparseBinaryVector& a, const SparseBinaryVector& b) -> ExactSimilarities {
  if (a.dim() != b.dim()) {
    throw dimension_mismatch("vector dimensions differ: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
  }
  const auto sa = a.support();
  const auto sb = b.support();
  std::uint64_t ip = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < sa.size() && y < sb.size()) {
    if (sa[x] == sb[y]) {
      ++ip;
      ++x;
      ++y;
    } else if (sa[x] < sb[y]) {
      ++x;
    } else {
      ++y;
    }
  }
  const std::uint64_t na = sa.size();
  const std::uint64_t nb = sb.size();
  ExactSimilarities out;
  out.ip = ip;
  out.hamming = na + nb - 2 * ip;
  const std::uint64_t union_size = na + nb - ip;
  out.jaccard = union_size == 0 ? 1.0 : static_cast<double>(ip) / static_cast<double>(union_size);
  out.cosine = (na == 0 || nb == 0) ? 0.0 : static_cast<double>(ip) / std::sqrt(static_cast<double>(na * nb));
  return out;
}

auto expected_sketch_weight(std::uint64_t count, std::uint32_t sketch_dim) -> double {
  const double n = 1.0 - 1.0 / static_cast<double>(sketch_dim);
  return static_cast<double>(sketch_dim) * (1.0 - std::pow(n, static_cast<double>(count)));
}

auto expected_sketch_overlap(std::uint64_t count_a, std::uint64_t count_b, std::uint64_t ip, std::uint32_t sketch_dim)
    -> double {
  const double n = 1.0 - 1.0 / static_cast<double>(sketch_dim);
  const auto pa = static_cast<double>(count_a);
  const auto pb = static_cast<double>(count_b);
  const auto pip = static_cast<double>(ip);
  return static_cast<double>(sketch_dim) * (1.0 - std::pow(n, pa) - std::pow(n, pb) + std::pow(n, pa + pb - pip));
}

auto enumerate_expectations(const SparseBinaryVector& a, const SparseBinaryVector& b, std::uint32_t sketch_dim)
    -> Expectations {
  if (a.dim() != b.dim()) {
    throw dimension_mismatch("vector dimensions differ");
  }
  if (sketch_dim < 1) {
    throw parameter_error("sketch dimension must be positive");
  }
  const std::size_t d = a.dim();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (total > max_enumerated_mappings / sketch_dim) {
      throw parameter_error("N^d exceeds the enumeration limit of " + std::to_string(max_enumerated_mappings));
    }
    total *= sketch_dim;
  }

  // Mixed-radix odometer over every mapping pi in {0..N-1}^d.
  std::vector<std::uint32_t> pi(d, 0);
  std::vector<std::uint8_t> in_a(sketch_dim);
  std::vector<std::uint8_t> in_b(sketch_dim);
  std::uint64_t weight_sum = 0;
  std::uint64_t overlap_sum = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    std::fill(in_a.begin(), in_a.end(), 0);
    std::fill(in_b.begin(), in_b.end(), 0);
    for (const auto i : a.support()) {
      in_a[pi[i]] = 1;
    }
    for (const auto i : b.support()) {
      in_b[pi[i]] = 1;
    }
    for (std::uint32_t j = 0; j < sketch_dim; ++j) {
      weight_sum += in_a[j];
      overlap_sum += static_cast<std::uint64_t>(in_a[j] & in_b[j]);
    }
    for (std::size_t k = 0; k < d; ++k) {
      if (++pi[k] < sketch_dim) {
        break;
      }
      pi[k] = 0;
    }
  }
  return Expectations{static_cast<double>(weight_sum) / static_cast<double>(total),
                      static_cast<double>(overlap_sum) / static_cast<double>(total)};
}

auto threshold_pairs(const Corpus& corpus, Measure measure, double threshold, unsigned threads)
    -> std::vector<PairValue> {
  const std::size_t rows = corpus.size();
  // One bucket per first index keeps the merged output ordered for any thread count.
  std::vector<std::vector<PairValue>> per_row(rows);
  parallel_for(rows, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < rows; ++j) {
        const double v = exact_similarities(corpus[i], corpus[j]).value(measure);
        if (passes_threshold(measure, v, threshold)) {
          per_row[i].push_back(PairValue{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
        }
      }
    }
  });
  std::vector<PairValue> out;
  for (auto& bucket : per_row) {
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

void write_pairs_csv(std::ostream& os, const std::vector<PairValue>& pairs) {
  os << "i,j,value\n";
  const auto old_precision = os.precision(17);
  for (const auto& p : pairs) {
    os << p.i << ',' << p.j << ',' << p.value << '\n';
  }
  os.precision(old_precision);
}

} // namespace binsketch::oracle
