#include "diachron/genre.hpp"

#include "diachron/errors.hpp"
#include "diachron/text.hpp"

namespace diachron {

Genre Genre::unknown(std::string label) {
    Genre g;
    g.kind_ = Kind::unknown;
    g.label_ = std::move(label);
    return g;
}

Genre Genre::from_name(std::string_view name) {
    if (name == "fiction") return Kind::fiction;
    if (name == "magazine") return Kind::magazine;
    if (name == "newspaper") return Kind::newspaper;
    if (name == "non_fiction") return Kind::non_fiction;
    if (name == "movie_play_script") return Kind::movie_play_script;
    constexpr std::string_view unknown_prefix = "unknown:";
    if (name.starts_with(unknown_prefix) && name.size() > unknown_prefix.size()) {
        return unknown(std::string(name.substr(unknown_prefix.size())));
    }
    throw ConfigError("unrecognized genre name '" + std::string(name) + "'");
}

std::string Genre::name() const {
    switch (kind_) {
        case Kind::fiction: return "fiction";
        case Kind::magazine: return "magazine";
        case Kind::newspaper: return "newspaper";
        case Kind::non_fiction: return "non_fiction";
        case Kind::movie_play_script: return "movie_play_script";
        case Kind::unknown: break;
    }
    return "unknown:" + label_;
}

const PrefixMap& default_prefix_map() {
    static const PrefixMap map{
        {"fic", Genre::Kind::fiction},
        {"mag", Genre::Kind::magazine},
        {"news", Genre::Kind::newspaper},
        {"nf", Genre::Kind::non_fiction},
    };
    return map;
}

PrefixMap parse_prefix_map(std::string_view spec) {
    PrefixMap map;
    for (auto item : split_list(spec, ',')) {
        auto colon = item.find(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 == item.size()) {
            throw ConfigError("prefix map entry must be prefix:genre, got '" + std::string(item) + "'");
        }
        map.insert_or_assign(std::string(item.substr(0, colon)), Genre::from_name(item.substr(colon + 1)));
    }
    if (map.empty()) throw ConfigError("empty prefix map");
    return map;
}

}  // namespace diachron
