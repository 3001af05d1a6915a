#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "binsketch/bench.hpp"
#include "binsketch/estimators.hpp"

namespace binsketch::report {

// Shortest text that round-trips the double ("%.17g"); "inf"/"-inf"/"nan" otherwise.
[[nodiscard]] auto format_double(double v) -> std::string;

// CSV: header line, one row per key tuple, RFC-4180 quoting.
void write_csv(std::ostream& os, const bench::MseReport& report, std::string_view dataset);
void write_csv(std::ostream& os, const bench::RankingReport& report, std::string_view dataset);
void write_csv(std::ostream& os, const bench::TimingReport& report, std::string_view dataset);

// JSON lines: one object per row. Non-finite numbers become null.
void write_jsonl(std::ostream& os, const bench::MseReport& report, std::string_view dataset);
void write_jsonl(std::ostream& os, const bench::RankingReport& report, std::string_view dataset);
void write_jsonl(std::ostream& os, const bench::TimingReport& report, std::string_view dataset);

// One JSON object describing an estimation trace.
[[nodiscard]] auto trace_json(const EstimationTrace& trace) -> std::string;

// "<dataset>__<measure>__<kind>__<build>.<ext>" with unsafe characters replaced by '_'.
[[nodiscard]] auto report_file_name(std::string_view dataset, std::string_view measure, std::string_view kind,
                                    std::string_view build, std::string_view extension) -> std::string;

} // namespace binsketch::report
