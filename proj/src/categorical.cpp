#include "binsketch/categorical.hpp"

#include <algorithm>

#include "binsketch/errors.hpp"

namespace binsketch {

CategoricalSchema::CategoricalSchema(std::vector<std::vector<std::string>> categories)
    : categories_(std::move(categories)) {
  lookup_.resize(categories_.size());
  offsets_.reserve(categories_.size());
  for (std::size_t c = 0; c < categories_.size(); ++c) {
    if (categories_[c].empty()) {
      throw parameter_error("column " + std::to_string(c) + " has no categories");
    }
    offsets_.push_back(total_dim_);
    for (std::size_t k = 0; k < categories_[c].size(); ++k) {
      if (!lookup_[c].emplace(categories_[c][k], k).second) {
        throw parameter_error("duplicate category '" + categories_[c][k] + "' in column " + std::to_string(c));
      }
    }
    total_dim_ += categories_[c].size();
  }
}

auto CategoricalSchema::derive(const std::vector<CategoricalRow>& rows) -> CategoricalSchema {
  if (rows.empty()) {
    throw format_error("cannot derive a schema from an empty table");
  }
  const std::size_t width = rows.front().size();
  std::vector<std::vector<std::string>> categories(width);
  std::vector<std::unordered_map<std::string, std::size_t>> seen(width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw format_error("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " columns, expected " +
                         std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      if (seen[c].emplace(rows[r][c], categories[c].size()).second) {
        categories[c].push_back(rows[r][c]);
      }
    }
  }
  return CategoricalSchema{std::move(categories)};
}

auto CategoricalSchema::label(std::size_t column, const std::string& value) const -> std::optional<std::size_t> {
  const auto it = lookup_[column].find(value);
  if (it == lookup_[column].end()) {
    return std::nullopt;
  }
  return it->second;
}

auto CategoricalSchema::encode(const CategoricalRow& row) const -> SparseBinaryVector {
  if (row.size() != columns()) {
    throw format_error("row has " + std::to_string(row.size()) + " columns, schema has " + std::to_string(columns()));
  }
  std::vector<index_t> support;
  support.reserve(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) {
    const auto lbl = label(c, row[c]);
    if (!lbl) {
      throw format_error("unseen category '" + row[c] + "' in column " + std::to_string(c));
    }
    support.push_back(static_cast<index_t>(offsets_[c] + *lbl));
  }
  // Blocks are laid out in column order, so the support is already increasing.
  return SparseBinaryVector{total_dim_, std::move(support)};
}

auto CategoricalSchema::decode(const SparseBinaryVector& v) const -> CategoricalRow {
  if (v.dim() != total_dim_ || v.count() != columns()) {
    throw format_error("vector is not a one-hot encoding under this schema");
  }
  CategoricalRow row;
  row.reserve(columns());
  const auto support = v.support();
  for (std::size_t c = 0; c < columns(); ++c) {
    const std::size_t bit = support[c];
    if (bit < offsets_[c] || bit >= offsets_[c] + categories_[c].size()) {
      throw format_error("column " + std::to_string(c) + " block does not hold exactly one bit");
    }
    row.push_back(categories_[c][bit - offsets_[c]]);
  }
  return row;
}

auto encode_categorical(const std::vector<CategoricalRow>& rows, const std::optional<CategoricalSchema>& schema)
    -> EncodedTable {
  CategoricalSchema effective = schema ? *schema : CategoricalSchema::derive(rows);
  std::vector<SparseBinaryVector> vectors;
  vectors.reserve(rows.size());
  for (const auto& row : rows) {
    vectors.push_back(effective.encode(row));
  }
  const std::size_t dim = std::max<std::size_t>(1, effective.total_dim());
  return EncodedTable{Corpus{dim, std::move(vectors), Provenance{"<table>", "csv-categorical", "one-hot"}},
                      std::move(effective)};
}

auto categorical_distance(const CategoricalRow& u, const CategoricalRow& v) -> std::size_t {
  if (u.size() != v.size()) {
    throw dimension_mismatch("categorical rows of different width");
  }
  std::size_t differing = 0;
  for (std::size_t c = 0; c < u.size(); ++c) {
    differing += u[c] != v[c] ? 1 : 0;
  }
  return differing;
}

auto categorical_distance_from_hamming(double hamming) noexcept -> double { return hamming / 2.0; }

auto parse_csv(std::istream& in) -> CsvTable {
  std::vector<CategoricalRow> records;
  CategoricalRow record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  char ch = 0;

  const auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_record = [&] {
    if (!record.empty() || field_started || !field.empty()) {
      end_field();
      records.push_back(std::move(record));
    }
    record.clear();
  };

  while (in.get(ch)) {
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') {
          ++line;
        }
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
    case '"':
      if (!field.empty()) {
        throw format_error("quote inside unquoted field", line);
      }
      in_quotes = true;
      field_started = true;
      break;
    case ',':
      field_started = true;
      end_field();
      field_started = true;
      break;
    case '\r':
      break;
    case '\n':
      end_record();
      ++line;
      break;
    default:
      field.push_back(ch);
      field_started = true;
    }
  }
  if (in_quotes) {
    throw format_error("unterminated quoted field", line);
  }
  end_record();

  if (records.empty()) {
    throw format_error("CSV input has no header row");
  }
  CsvTable table;
  table.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw format_error("row has " + std::to_string(records[r].size()) + " fields, header has " +
                             std::to_string(table.header.size()),
                         r + 1);
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

auto csv_escape(const std::string& field) -> std::string {
  if (field.find_first_of(",\"\r\n") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

} // namespace binsketch
