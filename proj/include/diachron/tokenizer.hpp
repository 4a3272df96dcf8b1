#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diachron/corpus.hpp"

namespace diachron {

/// standard ends sentences at . ! ? (and the ellipsis character);
/// extended additionally at ; and :
enum class DelimiterMode { standard, extended };

DelimiterMode parse_delimiter_mode(std::string_view name);
std::string_view to_string(DelimiterMode mode);

/// Tokens ending in "." that never close a sentence. Matching is
/// case-sensitive and ignores surrounding quotes/brackets.
class AbbreviationSet {
public:
    /// The bundled list (Mr., Mrs., Jr., ...).
    AbbreviationSet();
    static AbbreviationSet empty();

    /// Throws ConfigError unless every entry ends with ".".
    void add(std::string_view token);

    /// One token per line, "#" starts a comment. Entries are added to the
    /// current set.
    void add_from_text(std::string_view text);
    void add_from_file(const std::filesystem::path& path);

    bool contains(std::string_view token) const { return tokens_.find(token) != tokens_.end(); }
    std::size_t size() const { return tokens_.size(); }

private:
    struct NoDefaults {};
    explicit AbbreviationSet(NoDefaults) {}

    std::set<std::string, std::less<>> tokens_;
};

struct Sentence {
    std::vector<std::string> tokens;
    std::size_t word_count = 0;
    std::shared_ptr<const DocumentRef> doc;
};

/// Tokens containing at least one letter or digit.
std::size_t word_count(std::span<const std::string> tokens);
std::size_t word_count(std::span<const std::string_view> tokens);

/// True when `token` closes a sentence given the token after it (null at
/// end of text).
bool ends_sentence(std::string_view token, const std::string_view* next, DelimiterMode mode,
                   const AbbreviationSet& abbrevs);

/// Exclusive end index of every sentence over `tokens`. The last entry is
/// always tokens.size() for non-empty input.
std::vector<std::size_t> sentence_ends(std::span<const std::string_view> tokens, DelimiterMode mode,
                                       const AbbreviationSet& abbrevs);

std::vector<Sentence> tokenize_sentences(std::string_view text, DelimiterMode mode, const AbbreviationSet& abbrevs);

inline constexpr std::size_t kRedactionRunLength = 10;

/// True iff at least ten consecutive tokens are exactly "@".
bool contains_redaction_run(std::span<const std::string> tokens);
bool contains_redaction_run(std::span<const std::string_view> tokens);

struct FilterReport {
    std::size_t removed_redacted = 0;
    std::size_t removed_short = 0;

    FilterReport& operator+=(const FilterReport& o) {
        removed_redacted += o.removed_redacted;
        removed_short += o.removed_short;
        return *this;
    }
    friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

struct FilterResult {
    std::vector<Sentence> kept;
    FilterReport report;
};

/// Drops sentences with a redaction run, then sentences shorter than
/// `min_words`. Order of kept sentences is preserved.
FilterResult filter_sentences(std::vector<Sentence> sentences, std::size_t min_words = 2);

}  // namespace diachron
