#include "diachron/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include <json.hpp>

#include "diachron/corpus.hpp"
#include "diachron/errors.hpp"
#include "diachron/text.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace diachron {

double GeneratorSpec::target_mean_for(int decade) const {
    if (auto it = target_mean.find(decade); it != target_mean.end()) return it->second;
    if (decades.size() < 2) return mean_start;
    const auto [lo, hi] = std::minmax_element(decades.begin(), decades.end());
    if (*hi == *lo) return mean_start;
    const double t = static_cast<double>(decade - *lo) / static_cast<double>(*hi - *lo);
    return mean_start + t * (mean_end - mean_start);
}

void GeneratorSpec::validate() const {
    if (decades.empty() || genres.empty()) throw ConfigError("generator needs at least one decade and one genre");
    for (int d : decades) {
        if (d % 10 != 0 || d < kFirstYear || d > decade_of(kLastYear)) {
            throw ConfigError("generator decade " + std::to_string(d) + " outside 1810-2000");
        }
    }
    if (std::set<int>(decades.begin(), decades.end()).size() != decades.size()) {
        throw ConfigError("duplicate generator decade");
    }
    if (std::set<Genre>(genres.begin(), genres.end()).size() != genres.size()) {
        throw ConfigError("duplicate generator genre");
    }
    for (const auto& g : genres) {
        if (g.is_unknown()) throw ConfigError("generator genres must be known genres");
    }
    if (docs_per_cell == 0 || sentences_per_doc == 0) throw ConfigError("generator needs documents and sentences");
    if (vocabulary_size < 10) throw ConfigError("vocabulary must hold at least 10 words");
    for (int d : decades) {
        const double m = target_mean_for(d);
        if (!(m >= 2.0) || m > 500.0) throw ConfigError("target mean must lie in [2, 500]");
    }
    for (double r : {redaction_rate, semicolon_rate, pattern_rate}) {
        if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("rates must lie in [0, 1]");
    }
    const auto words = split_whitespace(pattern);
    if (words.empty()) throw ConfigError("generator pattern is empty");
    for (auto w : words) {
        if (!std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
            throw ConfigError("generator pattern must be lowercase words");
        }
    }
}

namespace {

// movie_play_script has no default prefix and is rejected here.
std::string prefix_for(const Genre& g) {
    for (const auto& [prefix, genre] : default_prefix_map()) {
        if (genre == g) return prefix;
    }
    throw ConfigError("generator has no filename prefix for genre " + g.name());
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return p > 0.0 && unit() < p; }

private:
    std::mt19937_64 engine_;
};

std::vector<std::string> make_vocabulary(Rng& rng, std::size_t size, const std::set<std::string>& reserved) {
    static constexpr std::string_view consonants = "bcdfghjklmnprstvwz";
    static constexpr std::string_view vowels = "aeiou";
    std::set<std::string> seen;
    std::vector<std::string> words;
    while (words.size() < size) {
        std::string w;
        const auto syllables = 1 + rng.below(3);
        for (std::uint64_t s = 0; s < syllables; ++s) {
            w.push_back(consonants[rng.below(consonants.size())]);
            w.push_back(vowels[rng.below(vowels.size())]);
        }
        if (rng.chance(0.3)) w.push_back(consonants[rng.below(consonants.size())]);
        if (reserved.contains(w) || !seen.insert(w).second) continue;
        words.push_back(std::move(w));
    }
    return words;
}

std::string capitalized(std::string w) {
    if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 'a' + 'A');
    return w;
}

struct SentencePlan {
    std::vector<std::string> words;  // length = sentence word count
    std::size_t semicolon_after = 0;  // word index the ";" follows; 0 = none
    std::size_t redaction_at = 0;     // insert "@" run before this word; 0 = none
};

double sorted_median(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n % 2 == 1) return static_cast<double>(values[n / 2]);
    return (static_cast<double>(values[n / 2 - 1]) + static_cast<double>(values[n / 2])) / 2.0;
}

}  // namespace

std::uint64_t Manifest::total_sentences() const {
    std::uint64_t n = 0;
    for (const auto& c : cells) n += c.sentences;
    return n;
}

std::uint64_t Manifest::total_words() const {
    std::uint64_t n = 0;
    for (const auto& c : cells) n += c.words;
    return n;
}

Manifest generate_corpus(const GeneratorSpec& spec, const fs::path& out_root) {
    spec.validate();
    Rng rng(spec.seed);

    std::vector<std::string> pattern_words;
    for (auto w : split_whitespace(spec.pattern)) pattern_words.emplace_back(w);
    const std::set<std::string> reserved(pattern_words.begin(), pattern_words.end());
    const auto vocab = make_vocabulary(rng, spec.vocabulary_size, reserved);
    const std::size_t k = pattern_words.size();

    auto decades = spec.decades;
    std::sort(decades.begin(), decades.end());
    auto genres = spec.genres;
    std::sort(genres.begin(), genres.end());

    Manifest manifest;
    manifest.spec = spec;
    manifest.spec.decades = decades;
    manifest.spec.genres = genres;

    std::error_code ec;
    fs::create_directories(out_root, ec);
    if (ec) throw IoError("cannot create " + out_root.string() + ": " + ec.message());

    std::uint64_t next_id = 1;
    std::uint64_t file_counter = 0;
    for (int decade : decades) {
        const double target = spec.target_mean_for(decade);
        const auto base = static_cast<std::uint64_t>(std::floor(target));
        const double frac = target - static_cast<double>(base);
        const std::uint64_t spread = std::min<std::uint64_t>(base - 2, base / 2);

        const fs::path dir = out_root / std::to_string(decade);
        fs::create_directories(dir, ec);
        if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

        for (const auto& genre : genres) {
            ManifestCell cell;
            cell.decade = decade;
            cell.genre = genre;
            cell.target_mean = target;
            std::vector<std::uint64_t> kept_lengths;

            for (std::size_t d = 0; d < spec.docs_per_cell; ++d) {
                ManifestFile mf;
                mf.genre = genre;
                mf.year = decade + static_cast<int>(rng.below(10));
                mf.decade = decade;
                char id[16];
                std::snprintf(id, sizeof id, "%06llu", static_cast<unsigned long long>(next_id++));
                mf.source_id = id;
                mf.detached = (file_counter++ % 2) == 1;
                const std::string name = prefix_for(genre) + "_" + std::to_string(mf.year) + "_" + mf.source_id + ".txt";
                mf.path = std::to_string(decade) + "/" + name;

                std::string text = "<P> ";
                std::uint64_t token_index = 0;
                std::size_t tokens_on_line = 0;
                auto emit = [&](const std::string& token) {
                    if (tokens_on_line == 12) {
                        text.back() = '\n';
                        tokens_on_line = 0;
                    }
                    text += token;
                    text.push_back(' ');
                    ++tokens_on_line;
                    ++token_index;
                };

                for (std::size_t s = 0; s < spec.sentences_per_doc; ++s) {
                    if (s > 0 && s % 20 == 0) {
                        text += "\n\n<P> ";
                        tokens_on_line = 0;
                    }
                    // Length: base or base + 1 (mixing gives the fractional
                    // part), plus symmetric uniform jitter.
                    std::uint64_t length = base + (rng.unit() < frac ? 1 : 0);
                    if (spread > 0) length = length - spread + rng.below(2 * spread + 1);
                    length = std::max<std::uint64_t>(length, 2);

                    SentencePlan plan;
                    for (std::uint64_t w = 0; w < length; ++w) plan.words.push_back(vocab[rng.below(vocab.size())]);

                    const bool redacted = rng.chance(spec.redaction_rate);
                    std::size_t pattern_at = length;  // none
                    if (redacted) {
                        plan.redaction_at = 1 + rng.below(length - 1);
                    } else {
                        if (length >= k && rng.chance(spec.pattern_rate)) {
                            pattern_at = rng.below(length - k + 1);
                            for (std::size_t j = 0; j < k; ++j) plan.words[pattern_at + j] = pattern_words[j];
                            ++mf.pattern_insertions;
                        }
                        if (length >= 4 && rng.chance(spec.semicolon_rate)) {
                            // ";" follows word index `after`; both clauses keep two or more words and the
                            // pattern is never split.
                            std::vector<std::size_t> options;
                            for (std::size_t after = 1; after + 2 < length; ++after) {
                                if (pattern_at < length && after >= pattern_at && after + 1 < pattern_at + k) continue;
                                options.push_back(after);
                            }
                            if (!options.empty()) {
                                plan.semicolon_after = options[rng.below(options.size())];
                                ++mf.semicolons;
                            }
                        }
                    }
                    plan.words[0] = capitalized(plan.words[0]);

                    for (std::size_t w = 0; w < plan.words.size(); ++w) {
                        if (redacted && w == plan.redaction_at) {
                            for (std::size_t r = 0; r < 10; ++r) emit("@");
                        }
                        const bool last = w + 1 == plan.words.size();
                        const bool semi = plan.semicolon_after != 0 && w == plan.semicolon_after;
                        if (mf.detached) {
                            emit(plan.words[w]);
                            if (semi) {
                                emit(";");
                                mf.extended_boundaries.push_back(token_index);
                            }
                            if (last) emit(".");
                        } else {
                            emit(plan.words[w] + (last ? "." : semi ? ";" : ""));
                            if (semi) mf.extended_boundaries.push_back(token_index);
                        }
                    }
                    mf.boundaries.push_back(token_index);
                    mf.extended_boundaries.push_back(token_index);

                    ++mf.sentences;
                    if (redacted) {
                        ++mf.redacted_sentences;
                    } else {
                        ++mf.kept_sentences;
                        mf.words += length;
                        kept_lengths.push_back(length);
                    }
                }
                text.back() = '\n';

                std::ofstream out(out_root / mf.path, std::ios::binary | std::ios::trunc);
                if (!out) throw IoError("cannot write " + (out_root / mf.path).string());
                out << text;
                if (!out) throw IoError("write failed for " + (out_root / mf.path).string());

                cell.sentences += mf.kept_sentences;
                cell.redacted_sentences += mf.redacted_sentences;
                cell.words += mf.words;
                cell.semicolons += mf.semicolons;
                cell.pattern_count += mf.pattern_insertions;
                manifest.files.push_back(std::move(mf));
            }

            cell.mean = cell.sentences ? static_cast<double>(cell.words) / static_cast<double>(cell.sentences) : 0.0;
            cell.median = sorted_median(std::move(kept_lengths));
            cell.pattern_per_million =
                cell.words ? static_cast<double>(cell.pattern_count) * 1e6 / static_cast<double>(cell.words) : 0.0;
            manifest.cells.push_back(cell);
        }
    }

    std::ofstream out(out_root / "manifest.json", std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write manifest in " + out_root.string());
    out << manifest_to_json(manifest);
    if (!out) throw IoError("manifest write failed in " + out_root.string());
    return manifest;
}

std::string manifest_to_json(const Manifest& m) {
    ordered_json spec;
    spec["seed"] = m.spec.seed;
    spec["decades"] = m.spec.decades;
    auto genres = ordered_json::array();
    for (const auto& g : m.spec.genres) genres.push_back(g.name());
    spec["genres"] = genres;
    spec["docs_per_cell"] = m.spec.docs_per_cell;
    spec["sentences_per_doc"] = m.spec.sentences_per_doc;
    auto targets = ordered_json::object();
    for (int d : m.spec.decades) targets[std::to_string(d)] = m.spec.target_mean_for(d);
    spec["target_mean"] = targets;
    spec["vocabulary_size"] = m.spec.vocabulary_size;
    spec["redaction_rate"] = m.spec.redaction_rate;
    spec["semicolon_rate"] = m.spec.semicolon_rate;
    spec["pattern_rate"] = m.spec.pattern_rate;
    spec["pattern"] = m.spec.pattern;

    auto cells = ordered_json::array();
    for (const auto& c : m.cells) {
        ordered_json j;
        j["decade"] = c.decade;
        j["genre"] = c.genre.name();
        j["target_mean"] = c.target_mean;
        j["sentences"] = c.sentences;
        j["redacted_sentences"] = c.redacted_sentences;
        j["words"] = c.words;
        j["mean"] = c.mean;
        j["median"] = c.median;
        j["semicolons"] = c.semicolons;
        j["pattern_count"] = c.pattern_count;
        j["pattern_per_million"] = c.pattern_per_million;
        cells.push_back(std::move(j));
    }

    auto files = ordered_json::array();
    for (const auto& f : m.files) {
        ordered_json j;
        j["path"] = f.path;
        j["genre"] = f.genre.name();
        j["year"] = f.year;
        j["decade"] = f.decade;
        j["source_id"] = f.source_id;
        j["punctuation"] = f.detached ? "detached" : "attached";
        j["sentences"] = f.sentences;
        j["kept_sentences"] = f.kept_sentences;
        j["redacted_sentences"] = f.redacted_sentences;
        j["words"] = f.words;
        j["semicolons"] = f.semicolons;
        j["pattern_insertions"] = f.pattern_insertions;
        j["boundaries"] = f.boundaries;
        j["extended_boundaries"] = f.extended_boundaries;
        files.push_back(std::move(j));
    }

    ordered_json root;
    root["schema_version"] = 1;
    root["spec"] = std::move(spec);
    root["totals"] = {{"sentences", m.total_sentences()}, {"words", m.total_words()}};
    root["cells"] = std::move(cells);
    root["files"] = std::move(files);
    return root.dump(1) + "\n";
}

Manifest manifest_from_json(std::string_view json_text) {
    Manifest m;
    ordered_json root;
    try {
        root = ordered_json::parse(json_text);
        if (root.at("schema_version").get<int>() != 1) throw ConfigError("unsupported manifest schema version");
        const auto& spec = root.at("spec");
        m.spec.seed = spec.at("seed").get<std::uint64_t>();
        m.spec.decades = spec.at("decades").get<std::vector<int>>();
        m.spec.genres.clear();
        for (const auto& g : spec.at("genres")) m.spec.genres.push_back(Genre::from_name(g.get<std::string>()));
        m.spec.docs_per_cell = spec.at("docs_per_cell").get<std::size_t>();
        m.spec.sentences_per_doc = spec.at("sentences_per_doc").get<std::size_t>();
        for (const auto& [decade, mean] : spec.at("target_mean").items()) {
            m.spec.target_mean[std::stoi(decade)] = mean.get<double>();
        }
        m.spec.vocabulary_size = spec.at("vocabulary_size").get<std::size_t>();
        m.spec.redaction_rate = spec.at("redaction_rate").get<double>();
        m.spec.semicolon_rate = spec.at("semicolon_rate").get<double>();
        m.spec.pattern_rate = spec.at("pattern_rate").get<double>();
        m.spec.pattern = spec.at("pattern").get<std::string>();

        for (const auto& j : root.at("cells")) {
            ManifestCell c;
            c.decade = j.at("decade").get<int>();
            c.genre = Genre::from_name(j.at("genre").get<std::string>());
            c.target_mean = j.at("target_mean").get<double>();
            c.sentences = j.at("sentences").get<std::uint64_t>();
            c.redacted_sentences = j.at("redacted_sentences").get<std::uint64_t>();
            c.words = j.at("words").get<std::uint64_t>();
            c.mean = j.at("mean").get<double>();
            c.median = j.at("median").get<double>();
            c.semicolons = j.at("semicolons").get<std::uint64_t>();
            c.pattern_count = j.at("pattern_count").get<std::uint64_t>();
            c.pattern_per_million = j.at("pattern_per_million").get<double>();
            m.cells.push_back(c);
        }
        for (const auto& j : root.at("files")) {
            ManifestFile f;
            f.path = j.at("path").get<std::string>();
            f.genre = Genre::from_name(j.at("genre").get<std::string>());
            f.year = j.at("year").get<int>();
            f.decade = j.at("decade").get<int>();
            f.source_id = j.at("source_id").get<std::string>();
            f.detached = j.at("punctuation").get<std::string>() == "detached";
            f.sentences = j.at("sentences").get<std::uint64_t>();
            f.kept_sentences = j.at("kept_sentences").get<std::uint64_t>();
            f.redacted_sentences = j.at("redacted_sentences").get<std::uint64_t>();
            f.words = j.at("words").get<std::uint64_t>();
            f.semicolons = j.at("semicolons").get<std::uint64_t>();
            f.pattern_insertions = j.at("pattern_insertions").get<std::uint64_t>();
            f.boundaries = j.at("boundaries").get<std::vector<std::uint64_t>>();
            f.extended_boundaries = j.at("extended_boundaries").get<std::vector<std::uint64_t>>();
            m.files.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed manifest: ") + e.what());
    }
    return m;
}

Manifest read_manifest(const fs::path& path) { return manifest_from_json(read_file(path)); }

}  // namespace diachron
