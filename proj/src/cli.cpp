#include "binsketch/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "binsketch/baselines.hpp"
#include "binsketch/bench.hpp"
#include "binsketch/bit_sketch.hpp"
#include "binsketch/categorical.hpp"
#include "binsketch/docword.hpp"
#include "binsketch/errors.hpp"
#include "binsketch/estimators.hpp"
#include "binsketch/oracle.hpp"
#include "binsketch/report_io.hpp"
#include "binsketch/sbv.hpp"
#include "binsketch/synthetic.hpp"

#ifndef BINSKETCH_GIT_DESCRIBE
#define BINSKETCH_GIT_DESCRIBE "unknown"
#endif

namespace binsketch::cli {

namespace {

using nlohmann::ordered_json;

// Errors that carry their own exit code.
class cli_failure : public std::runtime_error {
public:
  cli_failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] auto code() const noexcept -> int { return code_; }

private:
  int code_;
};

[[noreturn]] void fail(int code, const std::string& message) { throw cli_failure(code, message); }

auto default_threads() -> unsigned {
  if (const char* env = std::getenv("BINSKETCH_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) {
        return static_cast<unsigned>(n);
      }
    } catch (const std::exception&) {
    }
  }
  return 1;
}

auto load_corpus(const std::string& path, const std::string& format) -> Corpus {
  if (format != "docword" && format != "csv-categorical" && format != "sbv") {
    fail(config_error, "unknown input format '" + format + "' (expected docword, csv-categorical or sbv)");
  }
  if (!std::filesystem::exists(path)) {
    fail(parse_error, "input file '" + path + "' does not exist");
  }
  if (format == "docword") {
    return load_docword(path);
  }
  if (format == "sbv") {
    return load_sbv_corpus(path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(parse_error, "cannot open '" + path + "'");
  }
  const auto table = parse_csv(in);
  auto encoded = encode_categorical(table.rows);
  const std::size_t dim = encoded.corpus.dim();
  return Corpus{dim, encoded.corpus.vectors(), Provenance{path, "csv-categorical", "one-hot"}};
}

auto open_output(const std::string& path) -> std::ofstream {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(config_error, "cannot write '" + path + "'");
  }
  return out;
}

auto sidecar_path(const std::string& sketch_path) -> std::string { return sketch_path + ".json"; }

// ---------------------------------------------------------------- sketch

struct SketchArgs {
  std::string input;
  std::string format = "docword";
  std::string algo = "binsketch";
  std::optional<std::uint32_t> size;
  std::optional<std::uint64_t> sparsity;
  std::optional<double> rho;
  std::uint64_t seed = 1;
  std::string output;
  unsigned threads = 1;
};

auto cmd_sketch(const SketchArgs& a, std::ostream& out) -> int {
  const auto algorithm = bench::parse_algorithm(a.algo);
  if (!algorithm || *algorithm == bench::Algorithm::exact) {
    fail(config_error, "unknown sketch algorithm '" + a.algo + "'");
  }
  const bool explicit_size = a.size.has_value();
  const bool auto_size = a.sparsity.has_value() || a.rho.has_value();
  if (explicit_size == auto_size || (auto_size && !(a.sparsity && a.rho))) {
    fail(config_error, "give exactly one of --size or (--sparsity and --rho)");
  }
  std::uint32_t n = 0;
  try {
    n = explicit_size ? *a.size : recommended_sketch_size(*a.sparsity, *a.rho);
  } catch (const parameter_error& e) {
    fail(config_error, e.what());
  }
  if (n < 2 && *algorithm != bench::Algorithm::minhash && *algorithm != bench::Algorithm::simhash) {
    fail(config_error, "sketch size must be at least 2");
  }
  if (n == 0) {
    fail(config_error, "sketch size must be positive");
  }

  const Corpus corpus = load_corpus(a.input, a.format);
  const std::uint64_t psi_bound = a.sparsity.value_or(std::max<std::uint64_t>(1, corpus.max_count()));

  std::ofstream file = open_output(a.output);
  std::string magic;
  switch (*algorithm) {
  case bench::Algorithm::binsketch: {
    magic = std::string(bsk1_magic);
    const SketchConfig config{corpus.dim(), n, a.seed, psi_bound};
    const auto mapping = build_mapping(config);
    for (const auto& s : sketch_all(corpus.vectors(), mapping, a.threads)) {
      write_bsk1(file, s, a.seed);
    }
    break;
  }
  case bench::Algorithm::bcs: {
    magic = std::string(baselines::bcs1_magic);
    const auto mapping = build_mapping(SketchConfig{corpus.dim(), n, a.seed, psi_bound});
    for (const auto& v : corpus.vectors()) {
      baselines::write_bcs1(file, baselines::bcs_sketch(v, mapping));
    }
    break;
  }
  case bench::Algorithm::minhash:
    magic = std::string(baselines::mnh1_magic);
    for (const auto& v : corpus.vectors()) {
      baselines::write_mnh1(file, baselines::minhash_sketch(v, n, a.seed));
    }
    break;
  case bench::Algorithm::simhash:
    magic = std::string(baselines::smh1_magic);
    for (const auto& v : corpus.vectors()) {
      baselines::write_smh1(file, baselines::simhash_sketch(v, n, a.seed));
    }
    break;
  case bench::Algorithm::exact:
    break;
  }
  if (!file) {
    fail(config_error, "write to '" + a.output + "' failed");
  }

  ordered_json meta;
  meta["format"] = magic;
  meta["algorithm"] = bench::to_string(*algorithm);
  meta["input_dim"] = corpus.dim();
  meta["N"] = n;
  meta["seed"] = a.seed;
  meta["count"] = corpus.size();
  meta["psi_observed"] = corpus.max_count();
  meta["sparsity_bound"] = psi_bound;
  if (a.rho) {
    meta["rho"] = *a.rho;
  }
  auto sidecar = open_output(sidecar_path(a.output));
  sidecar << meta.dump(2) << '\n';
  out << "wrote " << corpus.size() << " sketches (N=" << n << ") to " << a.output << '\n';
  return ok;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string sketch;
  std::size_t i = 0;
  std::size_t j = 0;
};

auto read_sidecar(const std::string& sketch_path) -> ordered_json {
  const auto path = sidecar_path(sketch_path);
  if (!std::filesystem::exists(sketch_path)) {
    fail(parse_error, "sketch file '" + sketch_path + "' does not exist");
  }
  std::ifstream in(path);
  if (!in) {
    fail(parse_error, "sidecar '" + path + "' is missing");
  }
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(parse_error, "sidecar '" + path + "': " + e.what());
  }
}

template <typename Record, typename Reader>
auto read_records(const std::string& path, Reader reader) -> std::vector<Record> {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(parse_error, "cannot open '" + path + "'");
  }
  std::vector<Record> records;
  try {
    while (auto r = reader(in)) {
      records.push_back(std::move(*r));
    }
  } catch (const format_error& e) {
    // A well-formed record of another kind is a data mismatch, not a parse error.
    fail(data_error, "sketch file '" + path + "': " + e.what());
  }
  return records;
}

void require_header(bool consistent, const std::string& what) {
  if (!consistent) {
    fail(data_error, "mismatched sketch headers: " + what);
  }
}

void require_index(std::size_t index, std::size_t count) {
  if (index >= count) {
    fail(data_error, "index " + std::to_string(index) + " out of range (file holds " + std::to_string(count) +
                         " sketches)");
  }
}

auto cmd_estimate(const EstimateArgs& a, std::ostream& out) -> int {
  const auto meta = read_sidecar(a.sketch);
  std::string algo_name;
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t dim = 0;
  try {
    algo_name = meta.at("algorithm").get<std::string>();
    n = meta.at("N").get<std::uint32_t>();
    seed = meta.at("seed").get<std::uint64_t>();
    dim = meta.at("input_dim").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    fail(parse_error, std::string("sidecar lacks a field: ") + e.what());
  }
  const auto algorithm = bench::parse_algorithm(algo_name);
  if (!algorithm || *algorithm == bench::Algorithm::exact) {
    fail(data_error, "sidecar names unknown algorithm '" + algo_name + "'");
  }

  ordered_json result;
  result["algorithm"] = algo_name;
  result["i"] = a.i;
  result["j"] = a.j;
  switch (*algorithm) {
  case bench::Algorithm::binsketch: {
    const auto records = read_records<PackedRecord>(a.sketch, [](std::istream& is) { return read_bsk1(is); });
    for (const auto& r : records) {
      require_header(r.seed == seed && r.bits.sketch_dim() == n, "record disagrees with sidecar N/seed");
    }
    require_index(a.i, records.size());
    require_index(a.j, records.size());
    const SketchConfig config{dim, n, seed};
    const auto trace = estimate_all(records[a.i].bits, records[a.j].bits, config);
    const auto fields = ordered_json::parse(report::trace_json(trace));
    for (const auto& [key, value] : fields.items()) {
      result[key] = value;
    }
    break;
  }
  case bench::Algorithm::minhash: {
    const auto records =
        read_records<baselines::MinHashSketch>(a.sketch, [](std::istream& is) { return baselines::read_mnh1(is); });
    for (const auto& r : records) {
      require_header(r.seed == seed && r.k() == n, "record disagrees with sidecar k/seed");
    }
    require_index(a.i, records.size());
    require_index(a.j, records.size());
    result["js"] = baselines::minhash_estimate_jaccard(records[a.i], records[a.j]);
    break;
  }
  case bench::Algorithm::simhash: {
    const auto records =
        read_records<baselines::SimHashSketch>(a.sketch, [](std::istream& is) { return baselines::read_smh1(is); });
    for (const auto& r : records) {
      require_header(r.seed == seed && r.k() == n, "record disagrees with sidecar k/seed");
    }
    require_index(a.i, records.size());
    require_index(a.j, records.size());
    result["collision_rate"] = baselines::simhash_collision_rate(records[a.i], records[a.j]);
    result["cos"] = baselines::simhash_estimate_cosine(records[a.i], records[a.j]);
    break;
  }
  case bench::Algorithm::bcs: {
    const auto records = read_records<baselines::BcsSketch>(
        a.sketch, [dim](std::istream& is) { return baselines::read_bcs1(is, dim); });
    for (const auto& r : records) {
      require_header(r.seed == seed && r.n_buckets() == n, "record disagrees with sidecar N/seed");
    }
    require_index(a.i, records.size());
    require_index(a.j, records.size());
    result["ham"] = baselines::bcs_estimate_hamming(records[a.i], records[a.j]);
    break;
  }
  case bench::Algorithm::exact:
    break;
  }
  out << result.dump() << '\n';
  return ok;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string input;
  std::string format = "docword";
  std::string mode = "mse";
  std::string measure = "jaccard";
  std::vector<double> thresholds;
  std::vector<std::uint32_t> sizes = {256, 512, 1024, 2048, 4096};
  std::vector<std::uint64_t> seeds;
  std::uint64_t seed = 1;
  std::size_t repeats = 10;
  std::vector<std::string> algos = {"binsketch"};
  std::uint64_t split_seed = 7;
  std::size_t repetitions = 5;
  std::optional<std::size_t> sample;
  std::uint64_t sample_seed = 1;
  std::string output;
  std::string output_dir;
  std::string output_format = "csv";
  std::string dataset;
  bool equal_coordinates = false;
  unsigned threads = 1;
};

auto cmd_bench(const BenchArgs& a, std::ostream& out) -> int {
  if (a.mode != "mse" && a.mode != "ranking" && a.mode != "timing") {
    fail(config_error, "unknown bench mode '" + a.mode + "'");
  }
  if (a.output_format != "csv" && a.output_format != "json") {
    fail(config_error, "unknown output format '" + a.output_format + "'");
  }
  const auto measure = parse_measure(a.measure);
  if (!measure) {
    fail(config_error, "unknown measure '" + a.measure + "'");
  }
  std::vector<bench::Algorithm> algorithms;
  for (const auto& name : a.algos) {
    const auto alg = bench::parse_algorithm(name);
    if (!alg) {
      fail(config_error, "unknown algorithm '" + name + "'");
    }
    if (a.mode != "timing" && !bench::supports(*alg, *measure)) {
      fail(config_error, name + " cannot estimate " + a.measure);
    }
    algorithms.push_back(*alg);
  }
  std::vector<double> thresholds = a.thresholds;
  if (thresholds.empty() && a.mode != "timing") {
    if (*measure == Measure::jaccard || *measure == Measure::cosine) {
      thresholds.assign(std::begin(bench::default_thresholds), std::end(bench::default_thresholds));
    } else {
      fail(config_error, "--thresholds is required for inner product and Hamming");
    }
  }
  std::vector<std::uint64_t> seeds = a.seeds;
  if (seeds.empty()) {
    for (std::size_t r = 0; r < a.repeats; ++r) {
      seeds.push_back(a.seed + r);
    }
  }
  for (const auto n : a.sizes) {
    if (n < 2) {
      fail(config_error, "sketch sizes must be at least 2");
    }
  }

  Corpus corpus = load_corpus(a.input, a.format);
  if (a.sample) {
    try {
      corpus = sample_rows(corpus, *a.sample, a.sample_seed);
    } catch (const parameter_error& e) {
      fail(config_error, e.what());
    }
  }
  const std::string dataset =
      a.dataset.empty() ? std::filesystem::path(a.input).stem().string() : a.dataset;

  bench::Options options;
  options.threads = a.threads;
  options.equal_coordinates = a.equal_coordinates;

  std::ostringstream text;
  const bool json = a.output_format == "json";
  try {
    if (a.mode == "mse") {
      const auto r = bench::run_mse(corpus, *measure, thresholds, a.sizes, seeds, algorithms, options);
      json ? report::write_jsonl(text, r, dataset) : report::write_csv(text, r, dataset);
    } else if (a.mode == "ranking") {
      const auto r =
          bench::run_ranking(corpus, *measure, thresholds, a.sizes, seeds, algorithms, a.split_seed, options);
      json ? report::write_jsonl(text, r, dataset) : report::write_csv(text, r, dataset);
    } else {
      const auto r = bench::run_timing(corpus, a.sizes, algorithms, a.repetitions, a.seed, options);
      json ? report::write_jsonl(text, r, dataset) : report::write_csv(text, r, dataset);
    }
  } catch (const parameter_error& e) {
    fail(config_error, e.what());
  }

  std::string target = a.output;
  if (target.empty() && !a.output_dir.empty()) {
    std::filesystem::create_directories(a.output_dir);
    const auto name = report::report_file_name(dataset, a.mode == "timing" ? "all" : a.measure, a.mode,
                                               BINSKETCH_GIT_DESCRIBE, json ? "jsonl" : "csv");
    target = (std::filesystem::path(a.output_dir) / name).string();
  }
  if (target.empty()) {
    out << text.str();
  } else {
    auto file = open_output(target);
    file << text.str();
    out << "wrote " << target << '\n';
  }
  return ok;
}

// ---------------------------------------------------------------- enum-check

struct EnumArgs {
  std::size_t dim = 6;
  std::uint32_t size = 3;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

auto cmd_enum_check(const EnumArgs& a, std::ostream& out) -> int {
  if (a.dim == 0 || a.size < 2) {
    fail(config_error, "enum-check needs dim >= 1 and size >= 2");
  }
  SplitMix64 rng{a.seed};
  double worst = 0.0;
  for (std::size_t t = 0; t < a.trials; ++t) {
    const auto count_a = static_cast<std::size_t>(rng.below(a.dim + 1));
    const auto count_b = static_cast<std::size_t>(rng.below(a.dim + 1));
    const auto a_vec = synthetic::random_vector(a.dim, count_a, rng);
    const auto b_vec = synthetic::random_vector(a.dim, count_b, rng);
    oracle::Expectations e;
    try {
      e = oracle::enumerate_expectations(a_vec, b_vec, a.size);
    } catch (const parameter_error& err) {
      fail(config_error, err.what());
    }
    const auto exact = oracle::exact_similarities(a_vec, b_vec);
    const double weight = oracle::expected_sketch_weight(count_a, a.size);
    const double overlap = oracle::expected_sketch_overlap(count_a, count_b, exact.ip, a.size);
    const double dev = std::max(std::abs(e.sketch_weight - weight), std::abs(e.sketch_overlap - overlap));
    worst = std::max(worst, dev);
    out << "trial " << t << ": |a|=" << count_a << " |b|=" << count_b << " ip=" << exact.ip
        << " E|a_s|=" << report::format_double(e.sketch_weight) << " E<a_s,b_s>="
        << report::format_double(e.sketch_overlap) << " deviation=" << report::format_double(dev) << '\n';
  }
  const bool pass = worst <= a.tolerance;
  out << (pass ? "PASS" : "FAIL") << " max deviation " << report::format_double(worst) << " (tolerance "
      << report::format_double(a.tolerance) << ")\n";
  return pass ? ok : failure;
}

// ---------------------------------------------------------------- pairs / generate

struct PairsArgs {
  std::string input;
  std::string format = "docword";
  std::string measure = "jaccard";
  double threshold = 0.5;
  std::string output;
  unsigned threads = 1;
};

auto cmd_pairs(const PairsArgs& a, std::ostream& out) -> int {
  const auto measure = parse_measure(a.measure);
  if (!measure) {
    fail(config_error, "unknown measure '" + a.measure + "'");
  }
  const Corpus corpus = load_corpus(a.input, a.format);
  const auto pairs = oracle::threshold_pairs(corpus, *measure, a.threshold, a.threads);
  if (a.output.empty()) {
    oracle::write_pairs_csv(out, pairs);
  } else {
    auto file = open_output(a.output);
    oracle::write_pairs_csv(file, pairs);
  }
  return ok;
}

struct GenerateArgs {
  synthetic::ClusteredSpec spec;
  std::string output;
  std::string format = "docword";
};

auto cmd_generate(const GenerateArgs& a, std::ostream& out) -> int {
  if (a.format != "docword" && a.format != "sbv") {
    fail(config_error, "generate writes docword or sbv, not '" + a.format + "'");
  }
  Corpus corpus = [&] {
    try {
      return synthetic::clustered_corpus(a.spec);
    } catch (const parameter_error& e) {
      fail(config_error, e.what());
    }
  }();
  auto file = open_output(a.output);
  if (a.format == "docword") {
    write_docword(file, corpus);
  } else {
    write_sbv_corpus(file, corpus);
  }
  out << "wrote " << corpus.size() << " vectors (d=" << corpus.dim() << ", max |a|=" << corpus.max_count() << ") to "
      << a.output << '\n';
  return ok;
}

auto comma_list(CLI::Option* opt) -> CLI::Option* { return opt->delimiter(','); }

} // namespace

auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"BinSketch: OR-sketches of sparse binary vectors and similarity estimation"};
  app.name(args.empty() ? "binsketch" : std::filesystem::path(args.front()).filename().string());
  app.require_subcommand(1);

  const unsigned threads = default_threads();

  SketchArgs sketch_args;
  sketch_args.threads = threads;
  auto* sketch_cmd = app.add_subcommand("sketch", "Sketch every vector of a corpus");
  sketch_cmd->add_option("--input", sketch_args.input, "Input corpus")->required();
  sketch_cmd->add_option("--format", sketch_args.format, "docword | csv-categorical | sbv");
  sketch_cmd->add_option("--algo", sketch_args.algo, "binsketch | minhash | simhash | bcs");
  sketch_cmd->add_option("--size", sketch_args.size, "Sketch length N (coordinates for minhash/simhash)");
  sketch_cmd->add_option("--sparsity", sketch_args.sparsity, "Sparsity bound psi for automatic sizing");
  sketch_cmd->add_option("--rho", sketch_args.rho, "Failure probability for automatic sizing");
  sketch_cmd->add_option("--seed", sketch_args.seed, "Mapping / hash seed");
  sketch_cmd->add_option("--output", sketch_args.output, "Sketch file (sidecar written to <output>.json)")->required();
  sketch_cmd->add_option("--threads", sketch_args.threads, "Worker threads");

  EstimateArgs estimate_args;
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate similarities of two sketched vectors");
  estimate_cmd->add_option("--sketch", estimate_args.sketch, "Sketch file written by 'sketch'")->required();
  estimate_cmd->add_option("-i", estimate_args.i, "First vector index")->required();
  estimate_cmd->add_option("-j", estimate_args.j, "Second vector index")->required();

  BenchArgs bench_args;
  bench_args.threads = threads;
  auto* bench_cmd = app.add_subcommand("bench", "MSE, ranking and timing experiments");
  bench_cmd->add_option("--input", bench_args.input, "Input corpus")->required();
  bench_cmd->add_option("--format", bench_args.format, "docword | csv-categorical | sbv");
  bench_cmd->add_option("--mode", bench_args.mode, "mse | ranking | timing");
  bench_cmd->add_option("--measure", bench_args.measure, "ip | hamming | jaccard | cosine");
  comma_list(bench_cmd->add_option("--thresholds", bench_args.thresholds, "Comma-separated thresholds"));
  comma_list(bench_cmd->add_option("--sizes", bench_args.sizes, "Comma-separated sketch budgets N"));
  comma_list(bench_cmd->add_option("--seeds", bench_args.seeds, "Comma-separated seeds"));
  bench_cmd->add_option("--seed", bench_args.seed, "First seed when --seeds is absent");
  bench_cmd->add_option("--repeats", bench_args.repeats, "Number of seeds when --seeds is absent");
  comma_list(bench_cmd->add_option("--algos", bench_args.algos, "binsketch,minhash,simhash,bcs,exact"));
  bench_cmd->add_option("--split-seed", bench_args.split_seed, "Seed of the 90/10 ranking split");
  bench_cmd->add_option("--repetitions", bench_args.repetitions, "Timing repetitions (>= 3)");
  bench_cmd->add_option("--sample", bench_args.sample, "Use a seeded sample of this many rows");
  bench_cmd->add_option("--sample-seed", bench_args.sample_seed, "Seed for --sample");
  bench_cmd->add_option("--output", bench_args.output, "Report file (default stdout)");
  bench_cmd->add_option("--output-dir", bench_args.output_dir, "Directory for an auto-named report file");
  bench_cmd->add_option("--output-format", bench_args.output_format, "csv | json");
  bench_cmd->add_option("--dataset", bench_args.dataset, "Dataset name (default: input file stem)");
  bench_cmd->add_flag("--equal-coordinates", bench_args.equal_coordinates,
                      "Give every algorithm N coordinates instead of N bits");
  bench_cmd->add_option("--threads", bench_args.threads, "Worker threads");

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enum-check", "Check expectation formulas by exhaustive enumeration");
  enum_cmd->add_option("--dim", enum_args.dim, "Input dimension d");
  enum_cmd->add_option("--size", enum_args.size, "Sketch dimension N");
  enum_cmd->add_option("--trials", enum_args.trials, "Random vector pairs");
  enum_cmd->add_option("--seed", enum_args.seed, "Seed for the vector pairs");
  enum_cmd->add_option("--tolerance", enum_args.tolerance, "Allowed absolute deviation");

  PairsArgs pairs_args;
  pairs_args.threads = threads;
  auto* pairs_cmd = app.add_subcommand("pairs", "Export exact pairs passing a threshold as CSV");
  pairs_cmd->add_option("--input", pairs_args.input, "Input corpus")->required();
  pairs_cmd->add_option("--format", pairs_args.format, "docword | csv-categorical | sbv");
  pairs_cmd->add_option("--measure", pairs_args.measure, "ip | hamming | jaccard | cosine");
  pairs_cmd->add_option("--threshold", pairs_args.threshold, "Similarity (or distance) threshold");
  pairs_cmd->add_option("--output", pairs_args.output, "CSV file (default stdout)");
  pairs_cmd->add_option("--threads", pairs_args.threads, "Worker threads");

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic clustered corpus");
  gen_cmd->add_option("--rows", gen_args.spec.rows, "Number of vectors");
  gen_cmd->add_option("--dim", gen_args.spec.dim, "Dimension d");
  gen_cmd->add_option("--sparsity", gen_args.spec.sparsity, "Maximum ones per vector");
  gen_cmd->add_option("--seed", gen_args.spec.seed, "Generator seed");
  gen_cmd->add_option("--format", gen_args.format, "docword | sbv");
  gen_cmd->add_option("--output", gen_args.output, "Output file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) {
    argv.push_back(s.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return config_error;
  }

  try {
    if (*sketch_cmd) {
      return cmd_sketch(sketch_args, out);
    }
    if (*estimate_cmd) {
      return cmd_estimate(estimate_args, out);
    }
    if (*bench_cmd) {
      return cmd_bench(bench_args, out);
    }
    if (*enum_cmd) {
      return cmd_enum_check(enum_args, out);
    }
    if (*pairs_cmd) {
      return cmd_pairs(pairs_args, out);
    }
    if (*gen_cmd) {
      return cmd_generate(gen_args, out);
    }
  } catch (const cli_failure& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const format_error& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const dimension_mismatch& e) {
    err << "data error: " << e.what() << '\n';
    return data_error;
  } catch (const parameter_error& e) {
    err << "config error: " << e.what() << '\n';
    return config_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
  return failure;
}

} // namespace binsketch::cli
