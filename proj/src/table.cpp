#include "steptab/table.hpp"

#include <algorithm>
#include <unordered_set>

#include "steptab/text.hpp"

namespace steptab {

namespace {

bool is_annotation_digit(char c) { return c >= '0' && c <= '9'; }

// Splits raw delimited text into records of fields. CSV/TSV honour
// RFC-4180 quoting (quoted fields may contain delimiters, doubled quotes
// and newlines); pipe is a plain split.
std::vector<std::vector<std::string>> split_records(std::string_view raw, TableFormat format) {
    const char delim = format == TableFormat::Csv ? ',' : (format == TableFormat::Tsv ? '\t' : '|');
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool quoting_enabled = format != TableFormat::Pipe;

    // Strip a UTF-8 BOM if present.
    if (raw.starts_with("\xEF\xBB\xBF")) raw.remove_prefix(3);

    auto end_field = [&] {
        fields.push_back(std::move(field));
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(fields));
        fields.clear();
    };

    for (size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < raw.size() && raw[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        if (quoting_enabled && c == '"' && field.empty()) {
            in_quotes = true;
        } else if (c == delim) {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_record();
        } else {
            field.push_back(c);
        }
    }
    if (!field.empty() || !fields.empty()) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        end_record();
    }
    return records;
}

std::string standardize_name(std::string_view name) {
    return text::collapse_whitespace(text::fold_compat(name));
}

// Leading-number extraction. Rewrites the cell to its first maximal decimal
// token only when the remainder is clearly an annotation: a parenthetical
// ("922 (est.)"), footnote symbols ("1188*"), or a parenthesis wrapping the
// whole number ("(5)"). Compound values such as "1982-1985" or worded dates
// are left alone.
std::string extract_leading_number(const std::string& s) {
    std::string_view body = text::trim(s);
    bool wrapped = body.size() >= 2 && body.front() == '(' && body.back() == ')';
    if (wrapped) body = text::trim(body.substr(1, body.size() - 2));

    size_t i = 0;
    if (i < body.size() && (body[i] == '+' || body[i] == '-')) ++i;
    while (i < body.size() && (is_annotation_digit(body[i]) || body[i] == ',' || body[i] == '.')) ++i;
    while (i > 0 && (body[i - 1] == ',' || body[i - 1] == '.')) --i;

    std::string_view token = body.substr(0, i);
    if (!text::parse_decimal(text::strip_grouping(token))) return s;

    std::string_view rest = body.substr(i);
    if (rest.empty()) return wrapped ? std::string(token) : s;

    std::string_view rest_trimmed = text::trim(rest);
    bool parenthetical = rest.front() == ' ' && rest_trimmed.starts_with('(') && rest_trimmed.ends_with(')');
    bool footnote = rest_trimmed.find_first_not_of("*#\xE2\x80\xA0") == std::string_view::npos;
    if (parenthetical || footnote) return std::string(token);
    return s;
}

CellValue normalize_cell(const CellValue& cell, const NormalizationConfig& cfg) {
    if (!is_text(cell)) return cell;
    std::string s = std::get<std::string>(cell);
    // Rewrites can expose one another ("76,500 (total)" -> "76,500" ->
    // "76500"), so iterate to a fixpoint.
    for (int pass = 0; pass < 8; ++pass) {
        std::string before = s;
        if (cfg.normalize_unicode) s = text::fold_compat(s);
        s = std::string(text::trim(s));
        if (s.empty()) return Missing{};
        if (cfg.strip_thousands) s = text::strip_grouping(s);
        if (cfg.extract_leading_number) s = extract_leading_number(s);
        if (s == before) break;
    }
    return s;
}

}  // namespace

const Column* Table::find_column(std::string_view name) const {
    for (const auto& col : columns) {
        if (col.name == name) return &col;
    }
    return nullptr;
}

Table parse_table(std::string_view raw, TableFormat format) {
    auto records = split_records(raw, format);
    if (records.empty()) {
        throw TableParseError(TableParseError::Kind::EmptyInput, "table input has no header line");
    }

    const auto& header = records.front();
    Table t;
    t.columns.reserve(header.size());
    std::unordered_set<std::string> seen;
    for (const auto& name : header) {
        std::string standardized = standardize_name(name);
        if (standardized.empty()) {
            throw TableParseError(TableParseError::Kind::EmptyHeader, "empty column name in header");
        }
        if (!seen.insert(standardized).second) {
            throw TableParseError(TableParseError::Kind::DuplicateHeader,
                                  "duplicate column name after standardization: " + standardized);
        }
        t.columns.push_back(Column{std::string(name), {}});
    }

    t.row_count = records.size() - 1;
    for (auto& col : t.columns) col.cells.reserve(t.row_count);
    for (size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        for (size_t c = 0; c < t.columns.size(); ++c) {
            if (c < rec.size() && !rec[c].empty()) {
                t.columns[c].cells.emplace_back(rec[c]);
            } else {
                t.columns[c].cells.emplace_back(Missing{});
            }
        }
    }
    return t;
}

Table normalize_table(const Table& t, const NormalizationConfig& cfg) {
    Table out;
    out.row_count = t.row_count;
    out.columns.reserve(t.columns.size());
    for (const auto& col : t.columns) {
        Column c;
        c.name = cfg.standardize_column_names ? standardize_name(col.name)
                                              : (cfg.normalize_unicode ? text::fold_compat(col.name) : col.name);
        c.cells.reserve(col.cells.size());
        for (const auto& cell : col.cells) {
            c.cells.push_back(normalize_cell(cell, cfg));
        }
        out.columns.push_back(std::move(c));
    }
    return out;
}

std::string serialize_for_prompt(const Table& t, std::size_t max_rows) {
    if (max_rows < 1) throw std::invalid_argument("serialize_for_prompt: max_rows must be >= 1");
    std::string out;
    for (size_t c = 0; c < t.columns.size(); ++c) {
        if (c > 0) out.push_back('|');
        out += t.columns[c].name;
    }
    const size_t emit = std::min(max_rows, t.row_count);
    for (size_t r = 0; r < emit; ++r) {
        out.push_back('\n');
        for (size_t c = 0; c < t.columns.size(); ++c) {
            if (c > 0) out.push_back('|');
            out += render_cell(t.columns[c].cells[r]);
        }
    }
    if (t.row_count > max_rows) {
        out += "\n... (" + std::to_string(t.row_count - max_rows) + " rows omitted)";
    }
    return out;
}

}  // namespace steptab
