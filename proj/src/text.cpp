#include "diachron/text.hpp"

#include <cstdint>

namespace diachron {

namespace {

bool is_cont(unsigned char c) { return (c & 0xC0) == 0x80; }

// Length of the well-formed sequence at s[pos], or 0 if malformed.
std::size_t valid_sequence_length(std::string_view s, std::size_t pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    const std::size_t left = s.size() - pos;
    auto at = [&](std::size_t i) { return static_cast<unsigned char>(s[pos + i]); };
    if (b0 < 0x80) return 1;
    if (b0 >= 0xC2 && b0 <= 0xDF) return left >= 2 && is_cont(at(1)) ? 2 : 0;
    if (b0 >= 0xE0 && b0 <= 0xEF) {
        if (left < 3) return 0;
        const unsigned char lo = b0 == 0xE0 ? 0xA0 : 0x80;
        const unsigned char hi = b0 == 0xED ? 0x9F : 0xBF;
        return at(1) >= lo && at(1) <= hi && is_cont(at(2)) ? 3 : 0;
    }
    if (b0 >= 0xF0 && b0 <= 0xF4) {
        if (left < 4) return 0;
        const unsigned char lo = b0 == 0xF0 ? 0x90 : 0x80;
        const unsigned char hi = b0 == 0xF4 ? 0x8F : 0xBF;
        return at(1) >= lo && at(1) <= hi && is_cont(at(2)) && is_cont(at(3)) ? 4 : 0;
    }
    return 0;
}

void append_utf8(std::string& out, char32_t cp) {
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

DecodedText repair_utf8(std::string_view bytes) {
    DecodedText out;
    out.text.reserve(bytes.size());
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const std::size_t len = valid_sequence_length(bytes, pos);
        if (len == 0) {
            append_utf8(out.text, kReplacementChar);
            ++out.decode_errors;
            ++pos;
        } else {
            out.text.append(bytes.substr(pos, len));
            pos += len;
        }
    }
    return out;
}

char32_t next_code_point(std::string_view s, std::size_t& pos) {
    const std::size_t len = valid_sequence_length(s, pos);
    const auto b0 = static_cast<unsigned char>(s[pos]);
    char32_t cp = kReplacementChar;
    switch (len) {
        case 1: cp = b0; break;
        case 2: cp = ((b0 & 0x1Fu) << 6) | (s[pos + 1] & 0x3F); break;
        case 3: cp = ((b0 & 0x0Fu) << 12) | ((s[pos + 1] & 0x3F) << 6) | (s[pos + 2] & 0x3F); break;
        case 4:
            cp = ((b0 & 0x07u) << 18) | ((s[pos + 1] & 0x3F) << 12) | ((s[pos + 2] & 0x3F) << 6) |
                 (s[pos + 3] & 0x3F);
            break;
        default: break;
    }
    pos += len == 0 ? 1 : len;
    return cp;
}

char32_t prev_code_point(std::string_view s, std::size_t end, std::size_t& start) {
    std::size_t begin = end - 1;
    // Back up over at most three continuation bytes.
    for (int i = 0; i < 3 && begin > 0 && is_cont(static_cast<unsigned char>(s[begin])); ++i) --begin;
    std::size_t pos = begin;
    const char32_t cp = next_code_point(s, pos);
    if (pos != end) {
        start = end - 1;
        return kReplacementChar;
    }
    start = begin;
    return cp;
}

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_letter(char32_t cp) {
    if (cp < 0x80) return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
    if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
    if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
    if (cp >= 0x370 && cp <= 0x52F) return cp != 0x37E && cp != 0x387;  // Greek, Cyrillic
    if (cp >= 0x1E00 && cp <= 0x1FFF) return true;                       // Latin/Greek extended
    if (cp >= 0xFB00 && cp <= 0xFB06) return true;                       // ligatures
    return false;
}

bool is_upper_letter(char32_t cp) {
    if (cp < 0x80) return cp >= U'A' && cp <= U'Z';
    if (cp >= 0xC0 && cp <= 0xDE) return cp != 0xD7;
    if (cp >= 0x100 && cp <= 0x17F) return cp % 2 == 0;
    if (cp >= 0x391 && cp <= 0x3AB) return true;
    if (cp >= 0x400 && cp <= 0x42F) return true;
    return false;
}

bool has_word_char(std::string_view token) {
    std::size_t pos = 0;
    while (pos < token.size()) {
        const auto c = static_cast<unsigned char>(token[pos]);
        if (c < 0x80) {
            if ((c >= '0' && c <= '9') || ((c | 0x20) >= 'a' && (c | 0x20) <= 'z')) return true;
            ++pos;
            continue;
        }
        if (is_word_char(next_code_point(token, pos))) return true;
    }
    return false;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

bool iequals_ascii(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        char x = a[i];
        char y = b[i];
        if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
        if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
        if (x != y) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_list(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(sep, start);
        if (end == std::string_view::npos) end = s.size();
        auto item = trim(s.substr(start, end - start));
        if (!item.empty()) out.push_back(item);
        start = end + 1;
    }
    return out;
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && is_ascii_space(text[i])) ++i;
        const std::size_t start = i;
        while (i < n && !is_ascii_space(text[i])) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    return tokens;
}

}  // namespace diachron
