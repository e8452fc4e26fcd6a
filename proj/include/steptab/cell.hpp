#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace steptab {

/// Calendar date. Construction goes through `parse_date`, which validates
/// against the Gregorian calendar.
struct Date {
    int year = 0;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    static bool valid(int year, int month, int day);
    std::string to_iso() const;  // "YYYY-MM-DD", zero padded
};

struct Missing {
    bool operator==(const Missing&) const = default;
};

/// One table cell. Numbers are always finite; a cell that failed to parse
/// is Missing, never NaN. Missing is a distinct variant so that emptiness
/// is explicit rather than encoded as empty text.
using CellValue = std::variant<Missing, std::string, double, Date>;

inline bool is_missing(const CellValue& v) { return std::holds_alternative<Missing>(v); }
inline bool is_text(const CellValue& v) { return std::holds_alternative<std::string>(v); }
inline bool is_number(const CellValue& v) { return std::holds_alternative<double>(v); }
inline bool is_date(const CellValue& v) { return std::holds_alternative<Date>(v); }

/// Canonical string form of a cell: text verbatim, numbers via
/// `text::render_number`, dates in ISO form, Missing as "".
std::string render_cell(const CellValue& v);

/// Parses a date against the supported formats:
///   "YYYY-MM-DD", "Month D, YYYY", "D Month YYYY", "M/D/YYYY" (month first).
/// Month names may be full or three-letter abbreviations, any case.
std::optional<Date> parse_date(std::string_view s);

/// Text -> Number when the cell parses as a decimal (grouping commas and a
/// single wrapping parenthesis are tolerated), otherwise Missing. Numbers
/// pass through; dates and Missing map to Missing and Missing respectively.
/// Never errors: unparseable input is data, not a failure.
CellValue coerce_numeric(const CellValue& v);

/// Text -> Date against the documented format list, Missing when
/// unparseable. Dates pass through; numbers map to Missing.
CellValue coerce_date(const CellValue& v);

}  // namespace steptab
