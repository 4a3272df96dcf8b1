#include "diachron/tokenizer.hpp"

#include <algorithm>

#include "diachron/errors.hpp"
#include "diachron/text.hpp"

namespace diachron {

namespace {

constexpr char32_t kEllipsis = 0x2026;

bool is_closer(char32_t cp) {
    return cp == U'"' || cp == U'\'' || cp == U')' || cp == U']' || cp == 0x201D || cp == 0x2019;
}

bool is_opener(char32_t cp) {
    return cp == U'"' || cp == U'\'' || cp == U'(' || cp == U'[' || cp == 0x201C || cp == 0x2018;
}

bool is_standard_delimiter(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?' || cp == kEllipsis; }

bool is_extended_only_delimiter(char32_t cp) { return cp == U';' || cp == U':'; }

// Delimiter left at the end of the token once trailing closers are skipped,
// or 0.
char32_t terminal_delimiter(std::string_view token, DelimiterMode mode) {
    std::size_t end = token.size();
    while (end > 0) {
        std::size_t start = 0;
        const char32_t cp = prev_code_point(token, end, start);
        if (is_closer(cp)) {
            end = start;
            continue;
        }
        if (is_standard_delimiter(cp)) return cp;
        if (mode == DelimiterMode::extended && is_extended_only_delimiter(cp)) return cp;
        return 0;
    }
    return 0;
}

std::string_view strip_wrapping(std::string_view token) {
    std::size_t begin = 0;
    while (begin < token.size()) {
        std::size_t pos = begin;
        if (!is_opener(next_code_point(token, pos))) break;
        begin = pos;
    }
    std::size_t end = token.size();
    while (end > begin) {
        std::size_t start = 0;
        if (!is_closer(prev_code_point(token, end, start))) break;
        end = start;
    }
    return token.substr(begin, end - begin);
}

bool is_single_initial(std::string_view core) {
    if (core.size() < 2 || core.back() != '.') return false;
    std::size_t pos = 0;
    const char32_t cp = next_code_point(core, pos);
    return pos == core.size() - 1 && is_upper_letter(cp);
}

bool starts_new_sentence(std::string_view next) {
    std::size_t pos = 0;
    const char32_t cp = next_code_point(next, pos);
    return is_upper_letter(cp) || is_opener(cp) || is_digit(cp);
}

template <typename Token>
bool has_redaction_run(std::span<const Token> tokens) {
    std::size_t run = 0;
    for (const auto& t : tokens) {
        run = t == "@" ? run + 1 : 0;
        if (run >= kRedactionRunLength) return true;
    }
    return false;
}

}  // namespace

DelimiterMode parse_delimiter_mode(std::string_view name) {
    if (name == "standard") return DelimiterMode::standard;
    if (name == "extended") return DelimiterMode::extended;
    throw ConfigError("delimiter mode must be standard or extended, got '" + std::string(name) + "'");
}

std::string_view to_string(DelimiterMode mode) { return mode == DelimiterMode::standard ? "standard" : "extended"; }

AbbreviationSet::AbbreviationSet() {
    for (const char* a : {"Mr.",  "Mrs.", "Ms.",  "Jr.", "Sr.",  "Dr.",  "St.", "Prof.", "Rev.", "Gen.", "Col.",
                          "Capt.", "vs.", "etc.", "e.g.", "i.e.", "cf.", "No.", "Nos.",  "Vol.", "Vols.", "p.",
                          "pp.", "ch.", "Co.", "Inc.", "Ltd.", "U.S.", "a.m.", "p.m."}) {
        tokens_.emplace(a);
    }
}

AbbreviationSet AbbreviationSet::empty() { return AbbreviationSet(NoDefaults{}); }

void AbbreviationSet::add(std::string_view token) {
    if (token.size() < 2 || token.back() != '.') {
        throw ConfigError("abbreviation must end with '.', got '" + std::string(token) + "'");
    }
    tokens_.emplace(token);
}

void AbbreviationSet::add_from_text(std::string_view text) {
    for (auto line : split_list(text, '\n')) {
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
        if (!line.empty()) add(line);
    }
}

void AbbreviationSet::add_from_file(const std::filesystem::path& path) { add_from_text(read_file(path)); }

std::size_t word_count(std::span<const std::string> tokens) {
    return static_cast<std::size_t>(
        std::count_if(tokens.begin(), tokens.end(), [](const std::string& t) { return has_word_char(t); }));
}

std::size_t word_count(std::span<const std::string_view> tokens) {
    return static_cast<std::size_t>(std::count_if(tokens.begin(), tokens.end(), has_word_char));
}

bool ends_sentence(std::string_view token, const std::string_view* next, DelimiterMode mode,
                   const AbbreviationSet& abbrevs) {
    const char32_t delim = terminal_delimiter(token, mode);
    if (delim == 0) return false;
    // Historical ; and : split regardless of what follows.
    if (is_extended_only_delimiter(delim)) return true;
    const auto core = strip_wrapping(token);
    if (abbrevs.contains(core) || is_single_initial(core)) return false;
    return next == nullptr || starts_new_sentence(*next);
}

std::vector<std::size_t> sentence_ends(std::span<const std::string_view> tokens, DelimiterMode mode,
                                       const AbbreviationSet& abbrevs) {
    std::vector<std::size_t> ends;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string_view* next = i + 1 < tokens.size() ? &tokens[i + 1] : nullptr;
        if (next == nullptr || ends_sentence(tokens[i], next, mode, abbrevs)) ends.push_back(i + 1);
    }
    return ends;
}

std::vector<Sentence> tokenize_sentences(std::string_view text, DelimiterMode mode, const AbbreviationSet& abbrevs) {
    const auto tokens = split_whitespace(text);
    std::vector<Sentence> sentences;
    std::size_t begin = 0;
    for (std::size_t end : sentence_ends(tokens, mode, abbrevs)) {
        Sentence s;
        s.tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(begin),
                        tokens.begin() + static_cast<std::ptrdiff_t>(end));
        s.word_count = word_count(s.tokens);
        sentences.push_back(std::move(s));
        begin = end;
    }
    return sentences;
}

bool contains_redaction_run(std::span<const std::string> tokens) { return has_redaction_run(tokens); }
bool contains_redaction_run(std::span<const std::string_view> tokens) { return has_redaction_run(tokens); }

FilterResult filter_sentences(std::vector<Sentence> sentences, std::size_t min_words) {
    if (min_words < 1) throw ConfigError("min_words must be at least 1");
    FilterResult result;
    result.kept.reserve(sentences.size());
    for (auto& s : sentences) {
        if (contains_redaction_run(s.tokens)) {
            ++result.report.removed_redacted;
        } else if (word_count(s.tokens) < min_words) {
            ++result.report.removed_short;
        } else {
            result.kept.push_back(std::move(s));
        }
    }
    return result;
}

}  // namespace diachron
