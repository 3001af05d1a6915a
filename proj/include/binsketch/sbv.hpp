#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "binsketch/corpus.hpp"

namespace binsketch {

inline constexpr std::string_view sbv1_magic = "SBV1";

// SBV1 record: magic | dim u32 | count u32 | count LEB128 varints holding the
// support as deltas (first index, then successive differences).
void write_sbv1(std::ostream& os, const SparseBinaryVector& v);
// nullopt at a clean end of stream; format_error on anything malformed.
[[nodiscard]] auto read_sbv1(std::istream& is) -> std::optional<SparseBinaryVector>;

// A corpus file is a plain sequence of SBV1 records of equal dimension.
void write_sbv_corpus(std::ostream& os, const Corpus& corpus);
[[nodiscard]] auto read_sbv_corpus(std::istream& is, const std::string& source = "<stream>") -> Corpus;
[[nodiscard]] auto load_sbv_corpus(const std::string& path) -> Corpus;

} // namespace binsketch
