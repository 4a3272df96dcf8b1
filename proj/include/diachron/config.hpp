#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "diachron/corpus.hpp"
#include "diachron/pipeline.hpp"
#include "diachron/report.hpp"

namespace diachron {

/// Settings for one CLI run. Defaults reproduce the reference pipeline:
/// standard delimiters, sentences of one word or fewer dropped.
struct RunConfig {
    std::filesystem::path corpus_root;
    PrefixMap prefix_map = default_prefix_map();
    std::optional<std::filesystem::path> reclass_path;
    std::vector<std::string> tag_set = default_tag_set();
    std::optional<std::filesystem::path> abbrev_path;
    DelimiterMode delimiter_mode = DelimiterMode::standard;
    std::size_t min_words = 2;
    std::set<Genre> genres;  // empty: all
    std::set<int> decades;   // empty: all
    int jobs = 1;
    OutputFormat output_format = OutputFormat::csv;
    Denominator denominator = Denominator::kept;
    std::optional<std::filesystem::path> out_dir;
    std::vector<std::string> patterns;
    std::optional<std::filesystem::path> patterns_file;

    /// Throws ConfigError on an out-of-range value.
    void validate() const;
};

/// Flat key=value text; "#" starts a comment line.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Applies one setting. Keys match the long CLI flag names
/// (root, delimiters, min-words, genres, decades, jobs, format, out,
/// denominator, reclass, abbrevs, tags, prefixes, pattern, patterns-file).
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Builds pipeline options (abbreviation file, patterns) from the config.
PipelineOptions make_pipeline_options(const RunConfig& config);

/// Scans the corpus and applies the genre/decade filters. Throws EmptyCorpus
/// when nothing remains.
ScanResult scan_for_run(const RunConfig& config);

}  // namespace diachron
