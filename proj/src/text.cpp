#include "steptab/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>

namespace steptab::text {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Decodes one UTF-8 code point starting at `i`; advances `i` past it.
// Malformed bytes decode as themselves so folding is total.
uint32_t decode_utf8(std::string_view s, size_t& i) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int extra = 0;
    uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        extra = 1;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        extra = 2;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        ++i;
        return b0;
    }
    if (i + extra >= s.size()) {
        // Truncated sequence.
        ++i;
        return b0;
    }
    for (int k = 1; k <= extra; ++k) {
        unsigned char bk = static_cast<unsigned char>(s[i + k]);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            return b0;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += 1 + extra;
    return cp;
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

std::string_view trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_run = false;
    for (char c : trim(s)) {
        if (is_space(c)) {
            if (!in_run) out.push_back(' ');
            in_run = true;
        } else {
            out.push_back(c);
            in_run = false;
        }
    }
    return out;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string fold_compat(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        uint32_t cp = decode_utf8(s, i);
        switch (cp) {
            case 0x00A0:
            case 0x202F:
            case 0x205F:
            case 0x3000:
                out.push_back(' ');
                continue;
            case 0x200B:
            case 0x200C:
            case 0x200D:
            case 0xFEFF:
                continue;  // zero-width, dropped
            case 0x2018:
            case 0x2019:
            case 0x201A:
            case 0x201B:
                out.push_back('\'');
                continue;
            case 0x201C:
            case 0x201D:
            case 0x201E:
            case 0x201F:
                out.push_back('"');
                continue;
            case 0x2212:
                out.push_back('-');
                continue;
            case 0x2044:
                out.push_back('/');
                continue;
            default:
                break;
        }
        if (cp >= 0x2000 && cp <= 0x200A) {
            out.push_back(' ');
        } else if (cp >= 0xFF01 && cp <= 0xFF5E) {
            append_utf8(out, cp - 0xFEE0);
        } else {
            append_utf8(out, cp);
        }
    }
    return out;
}

bool is_grouped_number(std::string_view s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t lead = 0;
    while (i < s.size() && is_digit(s[i])) {
        ++i;
        ++lead;
    }
    if (lead < 1 || lead > 3) return false;
    size_t groups = 0;
    while (i < s.size() && s[i] == ',') {
        if (i + 3 >= s.size()) return false;
        if (!is_digit(s[i + 1]) || !is_digit(s[i + 2]) || !is_digit(s[i + 3])) return false;
        i += 4;
        ++groups;
    }
    if (groups == 0) return false;
    if (i == s.size()) return true;
    // Optional fractional part.
    if (s[i] != '.') return false;
    ++i;
    size_t frac = 0;
    while (i < s.size() && is_digit(s[i])) {
        ++i;
        ++frac;
    }
    return frac > 0 && i == s.size();
}

std::string strip_grouping(std::string_view s) {
    if (!is_grouped_number(s)) return std::string(s);
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != ',') out.push_back(c);
    }
    return out;
}

std::optional<double> parse_decimal(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool negative = false;
    std::string_view body = s;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body.remove_prefix(1);
    }
    if (body.empty() || body[0] == '+' || body[0] == '-') return std::nullopt;
    std::string buf;
    if (body[0] == '.') {
        buf = "0";
        buf += body;
        body = buf;
    }
    double v = 0.0;
    const char* end = body.data() + body.size();
    auto [ptr, ec] = std::from_chars(body.data(), end, v);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    if (negative) v = -v;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

std::string render_number(double v) {
    if (v == 0.0) return "0";
    if (std::floor(v) == v && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == delim) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace steptab::text
