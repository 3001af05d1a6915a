#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "binsketch/corpus.hpp"

namespace binsketch {

using CategoricalRow = std::vector<std::string>;

// Label-encoding tables plus the layout of the one-hot blocks: column c owns
// bits [offset(c), offset(c) + cardinality(c)).
class CategoricalSchema {
public:
  CategoricalSchema() = default;
  // Categories per column, in label order. Throws parameter_error on duplicates or an empty column.
  explicit CategoricalSchema(std::vector<std::vector<std::string>> categories);

  // Labels assigned in first-appearance order, column by column.
  [[nodiscard]] static auto derive(const std::vector<CategoricalRow>& rows) -> CategoricalSchema;

  [[nodiscard]] auto columns() const noexcept -> std::size_t { return categories_.size(); }
  [[nodiscard]] auto categories(std::size_t column) const -> const std::vector<std::string>& {
    return categories_[column];
  }
  [[nodiscard]] auto offset(std::size_t column) const -> std::size_t { return offsets_[column]; }
  [[nodiscard]] auto total_dim() const noexcept -> std::size_t { return total_dim_; }

  // Label of `value` in `column`, or nullopt when unseen.
  [[nodiscard]] auto label(std::size_t column, const std::string& value) const -> std::optional<std::size_t>;

  // One-hot encoding of a row. Throws format_error for a wrong width or an unseen category.
  [[nodiscard]] auto encode(const CategoricalRow& row) const -> SparseBinaryVector;
  // Inverse of encode. Throws format_error unless the vector has exactly one bit per block.
  [[nodiscard]] auto decode(const SparseBinaryVector& v) const -> CategoricalRow;

private:
  std::vector<std::vector<std::string>> categories_;
  std::vector<std::unordered_map<std::string, std::size_t>> lookup_;
  std::vector<std::size_t> offsets_;
  std::size_t total_dim_ = 0;
};

struct EncodedTable {
  Corpus corpus;
  CategoricalSchema schema;
};

// One-hot encodes every row. With no schema one is derived from `rows`.
[[nodiscard]] auto encode_categorical(const std::vector<CategoricalRow>& rows,
                                      const std::optional<CategoricalSchema>& schema = std::nullopt) -> EncodedTable;

// Number of columns on which two rows differ.
[[nodiscard]] auto categorical_distance(const CategoricalRow& u, const CategoricalRow& v) -> std::size_t;

// The same distance read off binary encodings. The Hamming distance of two
// one-hot encodings counts every differing column twice (one bit leaves, one
// arrives), hence the halving.
[[nodiscard]] auto categorical_distance_from_hamming(double hamming) noexcept -> double;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CategoricalRow> rows;
};

// RFC-4180 CSV with a header row. Throws format_error on ragged rows or an unterminated quote.
[[nodiscard]] auto parse_csv(std::istream& in) -> CsvTable;
// Quotes a field when it holds a comma, quote, or line break.
[[nodiscard]] auto csv_escape(const std::string& field) -> std::string;

} // namespace binsketch
