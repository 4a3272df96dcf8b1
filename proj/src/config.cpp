#include "diachron/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "diachron/errors.hpp"
#include "diachron/text.hpp"

namespace diachron {

namespace {

template <typename Int>
Int parse_int(std::string_view key, std::string_view text) {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

void RunConfig::validate() const {
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
    if (min_words < 1) throw ConfigError("min-words must be at least 1");
    for (int d : decades) {
        if (d % 10 != 0 || d < kFirstYear || d > decade_of(kLastYear)) {
            throw ConfigError("decade " + std::to_string(d) + " is not a corpus decade (1810-2000)");
        }
    }
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        out.insert_or_assign(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
    }
    return out;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
    if (key == "root") {
        c.corpus_root = std::string(value);
    } else if (key == "delimiters") {
        c.delimiter_mode = parse_delimiter_mode(value);
    } else if (key == "min-words") {
        c.min_words = parse_int<std::size_t>(key, value);
    } else if (key == "genres") {
        c.genres.clear();
        for (auto g : split_list(value, ',')) c.genres.insert(Genre::from_name(g));
    } else if (key == "decades") {
        c.decades.clear();
        for (auto d : split_list(value, ',')) c.decades.insert(parse_int<int>(key, d));
    } else if (key == "jobs") {
        c.jobs = parse_int<int>(key, value);
    } else if (key == "format") {
        c.output_format = parse_output_format(value);
    } else if (key == "out") {
        c.out_dir = std::string(value);
    } else if (key == "denominator") {
        c.denominator = parse_denominator(value);
    } else if (key == "reclass") {
        c.reclass_path = std::string(value);
    } else if (key == "abbrevs") {
        c.abbrev_path = std::string(value);
    } else if (key == "tags") {
        c.tag_set.clear();
        for (auto t : split_list(value, ',')) c.tag_set.emplace_back(t);
    } else if (key == "prefixes") {
        c.prefix_map = parse_prefix_map(value);
    } else if (key == "pattern") {
        c.patterns.emplace_back(value);
    } else if (key == "patterns-file") {
        c.patterns_file = std::string(value);
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
    for (const auto& [key, value] : parse_key_values(read_file(path))) apply_setting(config, key, value);
}

PipelineOptions make_pipeline_options(const RunConfig& config) {
    config.validate();
    PipelineOptions options;
    options.mode = config.delimiter_mode;
    options.min_words = config.min_words;
    options.tags = config.tag_set;
    if (config.abbrev_path) options.abbrevs.add_from_file(*config.abbrev_path);
    for (const auto& p : config.patterns) options.patterns.push_back(TokenPattern::parse(p));
    if (config.patterns_file) {
        for (auto& p : parse_pattern_file(read_file(*config.patterns_file))) options.patterns.push_back(std::move(p));
    }
    return options;
}

ScanResult scan_for_run(const RunConfig& config) {
    ReclassificationMap reclass;
    if (config.reclass_path) reclass = read_reclassification(*config.reclass_path);
    auto scan = scan_corpus(config.corpus_root, config.prefix_map, reclass);
    auto& docs = scan.documents;
    std::erase_if(docs, [&](const DocumentRef& d) {
        return (!config.genres.empty() && !config.genres.contains(d.genre)) ||
               (!config.decades.empty() && !config.decades.contains(d.decade));
    });
    if (docs.empty()) throw EmptyCorpus("no corpus files match the genre/decade filters");
    return scan;
}

}  // namespace diachron
