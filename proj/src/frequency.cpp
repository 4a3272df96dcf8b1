#include "diachron/frequency.hpp"

#include <algorithm>

#include "diachron/errors.hpp"
#include "diachron/text.hpp"

namespace diachron {

namespace {

// Offset where the run of trailing non-word code points begins.
std::size_t tail_start(std::string_view token) {
    std::size_t end = token.size();
    while (end > 0) {
        std::size_t start = 0;
        if (is_word_char(prev_code_point(token, end, start))) break;
        end = start;
    }
    return end;
}

bool same(std::string_view a, std::string_view b, bool case_sensitive) {
    return case_sensitive ? a == b : iequals_ascii(a, b);
}

template <typename Token>
std::uint64_t count_impl(std::span<const Token> tokens, const TokenPattern& pattern) {
    const std::size_t k = pattern.tokens.size();
    if (k == 0 || tokens.size() < k) return 0;
    const bool cs = pattern.case_sensitive;
    const std::string_view last = pattern.tokens.back();
    const bool attached_punct = k == 1 && pattern.punctuation_only();

    auto last_matches = [&](std::string_view token) {
        if (same(token, last, cs)) return true;
        const std::size_t cut = tail_start(token);
        if (cut == 0 || cut == token.size()) return false;
        return attached_punct ? same(token.substr(cut), last, cs) : same(token.substr(0, cut), last, cs);
    };

    std::uint64_t matches = 0;
    for (std::size_t i = 0; i + k <= tokens.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j + 1 < k && ok; ++j) ok = same(tokens[i + j], pattern.tokens[j], cs);
        if (ok && last_matches(tokens[i + k - 1])) ++matches;
    }
    return matches;
}

}  // namespace

TokenPattern TokenPattern::parse(std::string_view text, bool case_sensitive) {
    TokenPattern p;
    for (auto t : split_whitespace(text)) p.tokens.emplace_back(t);
    if (p.tokens.empty()) throw ConfigError("empty token pattern");
    p.case_sensitive = case_sensitive;
    return p;
}

std::string TokenPattern::text() const {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

bool TokenPattern::punctuation_only() const {
    return std::none_of(tokens.begin(), tokens.end(), [](const std::string& t) { return has_word_char(t); });
}

std::vector<TokenPattern> parse_pattern_file(std::string_view text, bool case_sensitive) {
    std::vector<TokenPattern> patterns;
    for (auto line : split_list(text, '\n')) {
        if (line.starts_with('#')) continue;
        patterns.push_back(TokenPattern::parse(line, case_sensitive));
    }
    return patterns;
}

std::uint64_t count_matches(std::span<const std::string_view> tokens, const TokenPattern& pattern) {
    return count_impl(tokens, pattern);
}

std::uint64_t count_matches(std::span<const std::string> tokens, const TokenPattern& pattern) {
    return count_impl(tokens, pattern);
}

double per_million(std::uint64_t count, std::uint64_t word_total) {
    if (word_total == 0) {
        if (count == 0) return 0.0;
        throw UndefinedRate("non-zero count over zero words");
    }
    return static_cast<double>(count) * 1e6 / static_cast<double>(word_total);
}

}  // namespace diachron
