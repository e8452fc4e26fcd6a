#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace steptab::text {

/// Strips ASCII whitespace from both ends.
std::string_view trim(std::string_view s);

/// Collapses every run of whitespace (including tabs/newlines) to a single
/// space and trims the ends. Used for column-name standardization.
std::string collapse_whitespace(std::string_view s);

/// ASCII-only lowercasing; multi-byte UTF-8 sequences pass through untouched.
std::string ascii_lower(std::string_view s);

/// Compatibility folding of common special characters: exotic spaces become
/// ASCII space, zero-width characters vanish, curly quotes and the Unicode
/// minus sign fold to their ASCII forms, fullwidth ASCII folds to ASCII.
/// En/em dashes are distinct punctuation and are preserved.
std::string fold_compat(std::string_view s);

/// True for a decimal with comma grouping, e.g. "1,188" or "-12,345.6".
bool is_grouped_number(std::string_view s);

/// Removes grouping commas when `is_grouped_number`, otherwise returns the
/// input unchanged.
std::string strip_grouping(std::string_view s);

/// Full-string finite decimal parse ("750", "-3.5", "+1e2", ".5").
std::optional<double> parse_decimal(std::string_view s);

/// Canonical number rendering: integral values print without a fractional
/// part, everything else as the shortest round-trip decimal.
std::string render_number(double v);

/// Splits on a single-character delimiter; no quoting, empty fields kept.
std::vector<std::string> split(std::string_view s, char delim);

}  // namespace steptab::text
