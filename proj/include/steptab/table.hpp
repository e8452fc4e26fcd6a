#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "steptab/cell.hpp"

namespace steptab {

struct Column {
    std::string name;
    std::vector<CellValue> cells;

    bool operator==(const Column&) const = default;
};

/// Columnar in-memory table. Immutable by convention: every operation
/// returns a new Table, so concurrent reads need no synchronization.
/// Invariant: every column has exactly `row_count` cells and column names
/// are unique.
struct Table {
    std::vector<Column> columns;
    std::size_t row_count = 0;

    bool operator==(const Table&) const = default;

    const Column* find_column(std::string_view name) const;
    std::size_t column_count() const { return columns.size(); }
};

enum class TableFormat { Csv, Tsv, Pipe };

/// Rule-based cleanup applied after ingestion. All flags are independent.
struct NormalizationConfig {
    bool strip_thousands = true;         // "1,188" -> "1188"
    bool normalize_unicode = true;       // compatibility folding, see text::fold_compat
    bool standardize_column_names = true;  // trim + collapse inner whitespace
    bool extract_leading_number = true;  // "922 (est.)" -> "922", "(5)" -> "5"
};

class TableParseError : public std::runtime_error {
  public:
    enum class Kind { EmptyInput, DuplicateHeader, EmptyHeader };

    TableParseError(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// Ingests delimited text. The first line is the header; short rows are
/// padded with Missing; empty fields ingest as Missing. CSV/TSV follow
/// RFC-4180-style quoting; the pipe format is a plain split on '|'.
/// Headers that collide after name standardization are an error rather
/// than being silently renamed.
Table parse_table(std::string_view raw, TableFormat format);

/// Applies the configured rules. Idempotent and total on valid tables;
/// never changes the row or column counts. Text cells that trim to empty
/// become Missing regardless of configuration.
Table normalize_table(const Table& t, const NormalizationConfig& cfg);

/// Header line then row lines, fields joined by '|'. Missing renders as an
/// empty field, so an absent value shows up as consecutive delimiters.
/// Tables longer than `max_rows` are cut and terminated with a literal
/// "... (N rows omitted)" marker line.
std::string serialize_for_prompt(const Table& t, std::size_t max_rows);

}  // namespace steptab
