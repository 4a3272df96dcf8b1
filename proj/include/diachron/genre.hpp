#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace diachron {

/// Text category of a corpus document. Unrecognized filename prefixes are
/// kept as `unknown` with the prefix stored verbatim in `label`.
class Genre {
public:
    enum class Kind { fiction, magazine, newspaper, non_fiction, movie_play_script, unknown };

    Genre() = default;
    Genre(Kind kind) : kind_(kind) {}  // NOLINT(google-explicit-constructor)

    static Genre unknown(std::string label);

    /// Accepts the canonical names produced by `name()`, including
    /// "unknown:<label>". Throws ConfigError for anything else.
    static Genre from_name(std::string_view name);

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    bool is_unknown() const { return kind_ == Kind::unknown; }

    /// "fiction", "magazine", ..., or "unknown:<label>".
    std::string name() const;

    friend bool operator==(const Genre&, const Genre&) = default;
    friend std::strong_ordering operator<=>(const Genre&, const Genre&) = default;

private:
    Kind kind_ = Kind::unknown;
    std::string label_;
};

/// Filename prefix -> genre.
using PrefixMap = std::map<std::string, Genre, std::less<>>;

/// mag, fic, news, nf.
const PrefixMap& default_prefix_map();

/// Parses "mag:magazine,fic:fiction" style lists.
PrefixMap parse_prefix_map(std::string_view spec);

}  // namespace diachron
