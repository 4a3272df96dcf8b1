#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diachron/genre.hpp"

namespace diachron {

/// A run of tokens to count, e.g. "in order to" or ";".
struct TokenPattern {
    std::vector<std::string> tokens;
    bool case_sensitive = false;

    /// Whitespace-split; throws ConfigError on an empty pattern.
    static TokenPattern parse(std::string_view text, bool case_sensitive = false);

    std::string text() const;
    bool punctuation_only() const;

    friend bool operator==(const TokenPattern&, const TokenPattern&) = default;
};

/// One pattern per non-empty line, "#" comments.
std::vector<TokenPattern> parse_pattern_file(std::string_view text, bool case_sensitive = false);

/// Occurrences of `pattern` starting at every position of `tokens`
/// (overlaps count). The final pattern token also matches a corpus token
/// that carries extra trailing punctuation ("to," matches "to"); a
/// punctuation-only final pattern token matches the attached trailing
/// punctuation of a word ("b;" matches ";").
std::uint64_t count_matches(std::span<const std::string_view> tokens, const TokenPattern& pattern);
std::uint64_t count_matches(std::span<const std::string> tokens, const TokenPattern& pattern);

/// count / word_total * 1e6. Zero when both are zero; throws UndefinedRate
/// when words are zero but count is not.
double per_million(std::uint64_t count, std::uint64_t word_total);

struct FrequencyRow {
    int decade = 0;
    std::optional<Genre> genre;  // nullopt: all genres
    std::uint64_t match_count = 0;
    std::uint64_t word_total = 0;
    double per_million = 0;

    friend bool operator==(const FrequencyRow&, const FrequencyRow&) = default;
};

struct FrequencySeries {
    TokenPattern pattern;
    std::vector<FrequencyRow> rows;  // sorted by (decade, genre), corpus-wide row first
};

}  // namespace diachron
