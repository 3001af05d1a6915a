#include "binsketch/report_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "binsketch/categorical.hpp"

namespace binsketch::report {

namespace {

using nlohmann::ordered_json;

auto json_number(double v) -> ordered_json {
  if (!std::isfinite(v)) {
    return nullptr;
  }
  return v;
}

auto field(std::string_view s) -> std::string { return csv_escape(std::string(s)); }

} // namespace

auto format_double(double v) -> std::string {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const bench::MseReport& report, std::string_view dataset) {
  os << "dataset,algorithm,measure,threshold,N,seed,pair_count,mse,neg_log_mse,clamp_rate\n";
  for (const auto& r : report.rows) {
    os << field(dataset) << ',' << bench::to_string(r.algorithm) << ',' << to_string(r.measure) << ','
       << format_double(r.threshold) << ',' << r.sketch_dim << ',' << r.seed << ',' << r.pair_count << ','
       << format_double(r.mse) << ',' << (r.neg_log_mse ? format_double(*r.neg_log_mse) : "") << ','
       << format_double(r.clamp_rate) << '\n';
  }
}

void write_csv(std::ostream& os, const bench::RankingReport& report, std::string_view dataset) {
  os << "dataset,algorithm,measure,threshold,N,seed,accuracy,precision,recall,f1,query_count,skipped_queries\n";
  for (const auto& r : report.rows) {
    os << field(dataset) << ',' << bench::to_string(r.algorithm) << ',' << to_string(r.measure) << ','
       << format_double(r.threshold) << ',' << r.sketch_dim << ',' << r.seed << ','
       << format_double(r.metrics.accuracy) << ',' << format_double(r.metrics.precision) << ','
       << format_double(r.metrics.recall) << ',' << format_double(r.metrics.f1) << ',' << r.query_count << ','
       << r.skipped_queries << '\n';
  }
}

void write_csv(std::ostream& os, const bench::TimingReport& report, std::string_view dataset) {
  os << "dataset,algorithm,N,mapping_setup_seconds,sketch_seconds,vectors_per_second\n";
  for (const auto& r : report.rows) {
    os << field(dataset) << ',' << bench::to_string(r.algorithm) << ',' << r.sketch_dim << ','
       << format_double(r.mapping_setup_seconds) << ',' << format_double(r.sketch_seconds) << ','
       << format_double(r.vectors_per_second) << '\n';
  }
}

void write_jsonl(std::ostream& os, const bench::MseReport& report, std::string_view dataset) {
  for (const auto& r : report.rows) {
    ordered_json j;
    j["dataset"] = dataset;
    j["algorithm"] = bench::to_string(r.algorithm);
    j["measure"] = to_string(r.measure);
    j["threshold"] = r.threshold;
    j["N"] = r.sketch_dim;
    j["seed"] = r.seed;
    j["pair_count"] = r.pair_count;
    j["mse"] = json_number(r.mse);
    j["neg_log_mse"] = r.neg_log_mse ? json_number(*r.neg_log_mse) : ordered_json(nullptr);
    j["clamp_rate"] = r.clamp_rate;
    os << j.dump() << '\n';
  }
}

void write_jsonl(std::ostream& os, const bench::RankingReport& report, std::string_view dataset) {
  for (const auto& r : report.rows) {
    ordered_json j;
    j["dataset"] = dataset;
    j["algorithm"] = bench::to_string(r.algorithm);
    j["measure"] = to_string(r.measure);
    j["threshold"] = r.threshold;
    j["N"] = r.sketch_dim;
    j["seed"] = r.seed;
    j["accuracy"] = r.metrics.accuracy;
    j["precision"] = r.metrics.precision;
    j["recall"] = r.metrics.recall;
    j["f1"] = r.metrics.f1;
    j["query_count"] = r.query_count;
    j["skipped_queries"] = r.skipped_queries;
    os << j.dump() << '\n';
  }
}

void write_jsonl(std::ostream& os, const bench::TimingReport& report, std::string_view dataset) {
  for (const auto& r : report.rows) {
    ordered_json j;
    j["dataset"] = dataset;
    j["algorithm"] = bench::to_string(r.algorithm);
    j["N"] = r.sketch_dim;
    j["mapping_setup_seconds"] = r.mapping_setup_seconds;
    j["sketch_seconds"] = r.sketch_seconds;
    j["vectors_per_second"] = r.vectors_per_second;
    os << j.dump() << '\n';
  }
}

auto trace_json(const EstimationTrace& t) -> std::string {
  ordered_json j;
  j["n_as"] = t.n_as;
  j["n_bs"] = t.n_bs;
  j["n_asbs"] = t.n_asbs;
  j["n_a"] = t.n_a;
  j["n_b"] = t.n_b;
  j["ip"] = t.n_ab;
  j["ham"] = t.ham_ab;
  j["js"] = t.js_ab;
  j["cos"] = t.cos_ab;
  ordered_json c;
  c["saturated_a"] = t.clamped.saturated_a;
  c["saturated_b"] = t.clamped.saturated_b;
  c["log_arg_nonpositive"] = t.clamped.log_arg_nonpositive;
  c["inner_product_low"] = t.clamped.inner_product_low;
  c["inner_product_high"] = t.clamped.inner_product_high;
  c["hamming"] = t.clamped.hamming;
  c["jaccard"] = t.clamped.jaccard;
  c["cosine"] = t.clamped.cosine;
  j["clamped"] = c;
  return j.dump();
}

auto report_file_name(std::string_view dataset, std::string_view measure, std::string_view kind,
                      std::string_view build, std::string_view extension) -> std::string {
  std::string name;
  for (const auto part : {dataset, measure, kind, build}) {
    if (!name.empty()) {
      name += "__";
    }
    for (const char c : part) {
      const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                        c == '.' || c == '_';
      name.push_back(safe ? c : '_');
    }
  }
  name += '.';
  name += extension;
  return name;
}

} // namespace binsketch::report
