#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "binsketch/corpus.hpp"

namespace binsketch {

// UCI bag-of-words "docword" text: three header lines D, W, NNZ followed by NNZ
// lines "docID wordID count" with 1-based IDs. Any count >= 1 sets the bit
// wordID-1 of document docID-1; repeated (doc, word) lines merge.
// Throws format_error (with line number) on malformed input.
[[nodiscard]] auto parse_docword(std::istream& in, const std::string& source = "<stream>") -> Corpus;

// Reads a docword file, plain or gzip-compressed.
[[nodiscard]] auto load_docword(const std::string& path) -> Corpus;

// Canonical form: header, then one "doc word 1" line per set bit in (doc, word) order.
void write_docword(std::ostream& out, const Corpus& corpus);

// Whole file contents, transparently gunzipped. Throws format_error when unreadable.
[[nodiscard]] auto read_maybe_gzip(const std::string& path) -> std::string;

} // namespace binsketch
