#include "steptab/cell.hpp"

#include <array>
#include <cctype>
#include <cstdio>

#include "steptab/text.hpp"

namespace steptab {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

bool leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

const std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

// Matches a full month name, a three-letter abbreviation, or "sept".
std::optional<int> month_from_name(std::string_view word) {
    std::string lower = text::ascii_lower(word);
    if (lower == "sept") return 9;
    for (size_t m = 0; m < kMonthNames.size(); ++m) {
        if (lower == kMonthNames[m]) return static_cast<int>(m) + 1;
        if (lower.size() == 3 && kMonthNames[m].substr(0, 3) == lower) return static_cast<int>(m) + 1;
    }
    return std::nullopt;
}

std::optional<int> parse_int_field(std::string_view s, size_t min_digits, size_t max_digits) {
    if (s.size() < min_digits || s.size() > max_digits) return std::nullopt;
    int v = 0;
    for (char c : s) {
        if (!is_digit(c)) return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return v;
}

std::optional<Date> make_date(int y, int m, int d) {
    if (!Date::valid(y, m, d)) return std::nullopt;
    return Date{y, m, d};
}

// "YYYY-MM-DD" with 1-2 digit month/day tolerated.
std::optional<Date> parse_iso(std::string_view s) {
    auto parts = text::split(s, '-');
    if (parts.size() != 3) return std::nullopt;
    auto y = parse_int_field(parts[0], 4, 4);
    auto m = parse_int_field(parts[1], 1, 2);
    auto d = parse_int_field(parts[2], 1, 2);
    if (!y || !m || !d) return std::nullopt;
    return make_date(*y, *m, *d);
}

// "M/D/YYYY", month first.
std::optional<Date> parse_slashed(std::string_view s) {
    auto parts = text::split(s, '/');
    if (parts.size() != 3) return std::nullopt;
    auto m = parse_int_field(parts[0], 1, 2);
    auto d = parse_int_field(parts[1], 1, 2);
    auto y = parse_int_field(parts[2], 4, 4);
    if (!y || !m || !d) return std::nullopt;
    return make_date(*y, *m, *d);
}

// "Month D, YYYY" (comma optional) or "D Month YYYY".
std::optional<Date> parse_worded(std::string_view s) {
    std::vector<std::string_view> words;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        size_t start = i;
        while (i < s.size() && s[i] != ' ') ++i;
        if (i > start) words.push_back(s.substr(start, i - start));
    }
    if (words.size() != 3) return std::nullopt;

    auto strip_comma = [](std::string_view w) {
        if (!w.empty() && w.back() == ',') w.remove_suffix(1);
        return w;
    };

    if (auto m = month_from_name(words[0])) {
        auto d = parse_int_field(strip_comma(words[1]), 1, 2);
        auto y = parse_int_field(words[2], 4, 4);
        if (!d || !y) return std::nullopt;
        return make_date(*y, *m, *d);
    }
    if (auto m = month_from_name(strip_comma(words[1]))) {
        auto d = parse_int_field(strip_comma(words[0]), 1, 2);
        auto y = parse_int_field(words[2], 4, 4);
        if (!d || !y) return std::nullopt;
        return make_date(*y, *m, *d);
    }
    return std::nullopt;
}

// Unwraps one full pair of parentheses: "(5)" -> "5".
std::string_view unwrap_parens(std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        std::string_view inner = text::trim(s.substr(1, s.size() - 2));
        if (!inner.empty() && inner.find('(') == std::string_view::npos &&
            inner.find(')') == std::string_view::npos) {
            return inner;
        }
    }
    return s;
}

}  // namespace

bool Date::valid(int year, int month, int day) {
    if (year < 1 || year > 9999 || month < 1 || month > 12 || day < 1) return false;
    int days = kDaysInMonth[static_cast<size_t>(month - 1)];
    if (month == 2 && leap_year(year)) days = 29;
    return day <= days;
}

std::string Date::to_iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::string render_cell(const CellValue& v) {
    switch (v.index()) {
        case 1:
            return std::get<std::string>(v);
        case 2:
            return text::render_number(std::get<double>(v));
        case 3:
            return std::get<Date>(v).to_iso();
        default:
            return "";
    }
}

std::optional<Date> parse_date(std::string_view s) {
    std::string_view body = text::trim(s);
    if (body.empty()) return std::nullopt;
    if (auto d = parse_iso(body)) return d;
    if (auto d = parse_slashed(body)) return d;
    return parse_worded(body);
}

CellValue coerce_numeric(const CellValue& v) {
    if (is_number(v)) return v;
    if (!is_text(v)) return Missing{};
    std::string_view body = text::trim(std::get<std::string>(v));
    body = unwrap_parens(body);
    std::string ungrouped = text::strip_grouping(body);
    if (auto n = text::parse_decimal(ungrouped)) return *n;
    return Missing{};
}

CellValue coerce_date(const CellValue& v) {
    if (is_date(v)) return v;
    if (!is_text(v)) return Missing{};
    if (auto d = parse_date(std::get<std::string>(v))) return *d;
    return Missing{};
}

}  // namespace steptab
