#pragma once

// Seeded synthetic corpus with a ground-truth manifest. Generated text has
// no abbreviations, no sentence-internal delimiters and capitalized
// sentence starts, so every boundary is unambiguous. Half the files attach
// final punctuation to the last word ("word."), the other half detach it
// ("word .").

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "diachron/genre.hpp"

namespace diachron {

struct GeneratorSpec {
    std::uint64_t seed = 42;
    std::vector<int> decades{1810, 1860, 1910, 1960, 2000};
    std::vector<Genre> genres{Genre::Kind::fiction, Genre::Kind::magazine, Genre::Kind::newspaper,
                              Genre::Kind::non_fiction};
    std::size_t docs_per_cell = 4;
    std::size_t sentences_per_doc = 500;
    /// Per-decade mean sentence length. Decades missing here are
    /// interpolated linearly from mean_start (first decade) to mean_end
    /// (last decade).
    std::map<int, double> target_mean;
    double mean_start = 27.0;
    double mean_end = 12.0;
    std::size_t vocabulary_size = 2000;
    double redaction_rate = 0.0;  // share of sentences carrying a ten-"@" run
    double semicolon_rate = 0.0;  // share of sentences split by one ";"
    double pattern_rate = 0.0;    // share of sentences containing `pattern`
    std::string pattern = "in order to";

    double target_mean_for(int decade) const;
    /// Throws ConfigError for unusable settings.
    void validate() const;
};

struct ManifestFile {
    std::string path;  // relative to the corpus root
    Genre genre;
    int year = 0;
    int decade = 0;
    std::string source_id;
    bool detached = false;
    std::uint64_t sentences = 0;  // emitted under standard delimiters
    std::uint64_t kept_sentences = 0;
    std::uint64_t redacted_sentences = 0;
    std::uint64_t words = 0;  // words of kept sentences
    std::uint64_t semicolons = 0;
    std::uint64_t pattern_insertions = 0;
    std::vector<std::uint64_t> boundaries;           // token end index of each sentence
    std::vector<std::uint64_t> extended_boundaries;  // same, splitting at ";"
};

struct ManifestCell {
    int decade = 0;
    Genre genre;
    double target_mean = 0;
    std::uint64_t sentences = 0;  // kept, standard delimiters
    std::uint64_t redacted_sentences = 0;
    std::uint64_t words = 0;
    double mean = 0;
    double median = 0;
    std::uint64_t semicolons = 0;
    std::uint64_t pattern_count = 0;
    double pattern_per_million = 0;
};

struct Manifest {
    GeneratorSpec spec;
    std::vector<ManifestFile> files;
    std::vector<ManifestCell> cells;  // sorted by (decade, genre)

    std::uint64_t total_sentences() const;
    std::uint64_t total_words() const;
};

/// Writes the corpus tree and <out_root>/manifest.json. Deterministic for a
/// given spec. Throws IoError.
Manifest generate_corpus(const GeneratorSpec& spec, const std::filesystem::path& out_root);

std::string manifest_to_json(const Manifest& manifest);
Manifest manifest_from_json(std::string_view json_text);
Manifest read_manifest(const std::filesystem::path& path);

}  // namespace diachron
