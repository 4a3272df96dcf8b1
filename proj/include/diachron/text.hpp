#pragma once

// Byte-level text helpers shared by ingestion, tokenization, and matching.
// Text is UTF-8 throughout; classification covers ASCII plus the common
// Latin, Greek and Cyrillic letter blocks.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace diachron {

inline constexpr char32_t kReplacementChar = 0xFFFD;

struct DecodedText {
    std::string text;
    std::size_t decode_errors = 0;
};

/// Validates UTF-8; every byte that cannot start or continue a well-formed
/// sequence becomes U+FFFD and is counted once.
DecodedText repair_utf8(std::string_view bytes);

/// Decodes the code point starting at `pos` and advances `pos` past it.
/// Malformed bytes decode as U+FFFD (one byte consumed).
char32_t next_code_point(std::string_view s, std::size_t& pos);

/// Code point that ends at `end` (exclusive); `start` receives its offset.
char32_t prev_code_point(std::string_view s, std::size_t end, std::size_t& start);

bool is_ascii_space(char c);
bool is_letter(char32_t cp);
bool is_upper_letter(char32_t cp);
bool is_digit(char32_t cp);
inline bool is_word_char(char32_t cp) { return is_digit(cp) || is_letter(cp); }

/// True if the token contains at least one letter or digit.
bool has_word_char(std::string_view token);

/// ASCII case folding; non-ASCII bytes are untouched.
std::string ascii_lower(std::string_view s);
bool iequals_ascii(std::string_view a, std::string_view b);

std::string_view trim(std::string_view s);

/// Splits on `sep`, trimming items and dropping empty ones.
std::vector<std::string_view> split_list(std::string_view s, char sep);

/// Whitespace tokenization; views point into `text`.
std::vector<std::string_view> split_whitespace(std::string_view text);

}  // namespace diachron
