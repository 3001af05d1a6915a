#include "binsketch/docword.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <vector>

#include <zlib.h>

#include "binsketch/errors.hpp"

namespace binsketch {

namespace {

auto trim(std::string_view s) -> std::string_view {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

auto split_fields(std::string_view s) -> std::vector<std::string_view> {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) {
      break;
    }
    const auto end = s.find_first_of(" \t\r", start);
    out.push_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    pos = end == std::string_view::npos ? s.size() : end;
  }
  return out;
}

auto parse_integer(std::string_view field, std::size_t line, const char* what) -> long long {
  long long value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw format_error(std::string("expected integer ") + what + ", got '" + std::string(field) + "'", line);
  }
  return value;
}

} // namespace

auto parse_docword(std::istream& in, const std::string& source) -> Corpus {
  std::string raw;
  std::size_t line_no = 0;
  long long header[3] = {0, 0, 0};
  const char* header_names[3] = {"D", "W", "NNZ"};
  for (int h = 0; h < 3; ++h) {
    if (!std::getline(in, raw)) {
      throw format_error("missing header value " + std::string(header_names[h]), line_no + 1);
    }
    ++line_no;
    const auto fields = split_fields(raw);
    if (fields.size() != 1) {
      throw format_error("header line must hold exactly one integer (" + std::string(header_names[h]) + ")", line_no);
    }
    header[h] = parse_integer(fields[0], line_no, header_names[h]);
    if (header[h] < 0 || (h < 2 && header[h] == 0)) {
      throw format_error("header value " + std::string(header_names[h]) + " out of range", line_no);
    }
  }
  const auto docs = static_cast<std::size_t>(header[0]);
  const auto words = static_cast<std::size_t>(header[1]);
  const auto nnz = static_cast<std::size_t>(header[2]);
  if (words > 0xFFFFFFFFULL) {
    throw format_error("vocabulary size exceeds 32-bit index range", 2);
  }

  std::vector<std::vector<index_t>> supports(docs);
  std::size_t entries = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) {
      continue;
    }
    const auto fields = split_fields(raw);
    if (fields.size() != 3) {
      throw format_error("expected 'docID wordID count'", line_no);
    }
    const auto doc = parse_integer(fields[0], line_no, "docID");
    const auto word = parse_integer(fields[1], line_no, "wordID");
    const auto count = parse_integer(fields[2], line_no, "count");
    if (doc < 1 || static_cast<std::size_t>(doc) > docs) {
      throw format_error("docID " + std::to_string(doc) + " outside [1, " + std::to_string(docs) + "]", line_no);
    }
    if (word < 1 || static_cast<std::size_t>(word) > words) {
      throw format_error("wordID " + std::to_string(word) + " outside [1, " + std::to_string(words) + "]", line_no);
    }
    if (count < 1) {
      throw format_error("count must be positive, got " + std::to_string(count), line_no);
    }
    ++entries;
    if (entries > nnz) {
      throw format_error("more entries than NNZ = " + std::to_string(nnz), line_no);
    }
    supports[static_cast<std::size_t>(doc - 1)].push_back(static_cast<index_t>(word - 1));
  }
  if (entries != nnz) {
    throw format_error("header announces NNZ = " + std::to_string(nnz) + " but file holds " + std::to_string(entries) +
                       " entries");
  }

  std::vector<SparseBinaryVector> vectors;
  vectors.reserve(docs);
  for (auto& s : supports) {
    vectors.push_back(SparseBinaryVector::from_indices(words, std::move(s)));
  }
  return Corpus{words, std::move(vectors), Provenance{source, "docword", "count >= 1 -> 1"}};
}

auto read_maybe_gzip(const std::string& path) -> std::string {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    throw format_error("cannot open '" + path + "'");
  }
  std::string content;
  std::vector<char> buf(1 << 16);
  int got = 0;
  while ((got = gzread(file, buf.data(), static_cast<unsigned>(buf.size()))) > 0) {
    content.append(buf.data(), static_cast<std::size_t>(got));
  }
  int errnum = 0;
  const char* message = gzerror(file, &errnum);
  const bool failed = got < 0 || (errnum != Z_OK && errnum != Z_BUF_ERROR);
  const std::string detail = message != nullptr ? message : "";
  gzclose(file);
  if (failed) {
    throw format_error("error reading '" + path + "': " + detail);
  }
  return content;
}

auto load_docword(const std::string& path) -> Corpus {
  std::istringstream in(read_maybe_gzip(path));
  return parse_docword(in, path);
}

void write_docword(std::ostream& out, const Corpus& corpus) {
  std::size_t nnz = 0;
  for (const auto& v : corpus.vectors()) {
    nnz += v.count();
  }
  out << corpus.size() << '\n' << corpus.dim() << '\n' << nnz << '\n';
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (const auto w : corpus[d].support()) {
      out << (d + 1) << ' ' << (static_cast<std::size_t>(w) + 1) << " 1\n";
    }
  }
}

} // namespace binsketch
