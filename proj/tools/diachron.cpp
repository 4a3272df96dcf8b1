// diachron: sentence-length and construction-frequency statistics over a
// decade/genre corpus tree.
//
//   diachron stats --root CORPUS [--out DIR] [--format csv|json] ...
//   diachron freq --root CORPUS --pattern "in order to" --pattern ";" ...
//   diachron compare-delimiters --root CORPUS ...
//   diachron gen --out DIR [--seed 42] ...

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diachron/commands.hpp"
#include "diachron/errors.hpp"
#include "diachron/text.hpp"

namespace {

using diachron::RunConfig;

// Raw flag values; applied over the config file so flags win.
struct RunFlags {
    std::optional<std::string> config;
    std::map<std::string, std::string> values;
    std::vector<std::string> patterns;
};

void add_run_flags(CLI::App& cmd, RunFlags& flags, bool with_patterns) {
    cmd.add_option("--config", flags.config, "key=value config file; flags override its values");
    auto flag = [&](const char* name, const char* help) {
        cmd.add_option_function<std::string>(
            std::string("--") + name, [&flags, name](const std::string& v) { flags.values[name] = v; }, help);
    };
    flag("root", "corpus root directory");
    flag("delimiters", "standard (. ! ?) or extended (adds ; :)");
    flag("min-words", "drop sentences with fewer words (default 2)");
    flag("genres", "comma-separated genre filter");
    flag("decades", "comma-separated decade filter");
    flag("jobs", "worker threads (default 1)");
    flag("format", "csv or json");
    flag("out", "output directory (tables go to stdout when omitted)");
    flag("denominator", "kept or raw word totals for frequencies");
    flag("reclass", "CSV source_id,genre reclassification table");
    flag("abbrevs", "extra abbreviations, one per line");
    flag("tags", "comma-separated literal tags to strip (default <P>,<p>)");
    flag("prefixes", "filename prefix map, e.g. mag:magazine,fic:fiction");
    if (with_patterns) {
        cmd.add_option("--pattern", flags.patterns, "token pattern to count (repeatable)");
        flag("patterns-file", "file with one pattern per line");
    }
}

RunConfig build_config(const RunFlags& flags) {
    RunConfig config;
    if (flags.config) diachron::apply_config_file(config, *flags.config);
    for (const auto& [key, value] : flags.values) diachron::apply_setting(config, key, value);
    if (!flags.patterns.empty()) config.patterns = flags.patterns;
    if (config.corpus_root.empty()) throw diachron::ConfigError("--root (or root= in --config) is required");
    config.validate();
    return config;
}

void print_warnings(const diachron::RunReport& report) {
    constexpr std::size_t shown = 20;
    for (std::size_t i = 0; i < report.warnings.size() && i < shown; ++i) {
        std::cerr << "warning: " << report.warnings[i] << '\n';
    }
    if (report.warnings.size() > shown) {
        std::cerr << "warning: " << report.warnings.size() - shown << " more warnings not shown\n";
    }
}

int run_command(const RunFlags& flags, diachron::CommandOutput (*command)(const RunConfig&)) {
    const auto config = build_config(flags);
    const auto output = command(config);
    print_warnings(output.report);
    diachron::write_tables(output, config, std::cout);
    if (config.out_dir) {
        std::cerr << "wrote " << output.tables.size() << " tables to " << config.out_dir->string() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sentence-length and token-pattern statistics for decade/genre corpora"};
    app.require_subcommand(1);

    RunFlags stats_flags, freq_flags, compare_flags;
    auto* stats = app.add_subcommand("stats", "sentence counts and length distributions per decade and genre");
    add_run_flags(*stats, stats_flags, false);
    auto* freq = app.add_subcommand("freq", "per-million-word frequencies of token patterns");
    add_run_flags(*freq, freq_flags, true);
    auto* compare = app.add_subcommand("compare-delimiters", "standard vs extended delimiter summaries per cell");
    add_run_flags(*compare, compare_flags, false);

    diachron::GeneratorSpec spec;
    std::string gen_out;
    std::string gen_decades, gen_genres, gen_targets;
    auto* gen = app.add_subcommand("gen", "write a seeded synthetic corpus and its manifest");
    gen->add_option("--out", gen_out, "output corpus root")->required();
    gen->add_option("--seed", spec.seed, "random seed")->capture_default_str();
    gen->add_option("--decades", gen_decades, "comma-separated decades");
    gen->add_option("--genres", gen_genres, "comma-separated genres");
    gen->add_option("--docs-per-cell", spec.docs_per_cell, "documents per decade/genre cell")->capture_default_str();
    gen->add_option("--sentences-per-doc", spec.sentences_per_doc, "sentences per document")->capture_default_str();
    gen->add_option("--mean-start", spec.mean_start, "mean length in the first decade")->capture_default_str();
    gen->add_option("--mean-end", spec.mean_end, "mean length in the last decade")->capture_default_str();
    gen->add_option("--target-means", gen_targets, "explicit per-decade means, e.g. 1810:20,2000:12");
    gen->add_option("--vocab", spec.vocabulary_size, "vocabulary size")->capture_default_str();
    gen->add_option("--redaction-rate", spec.redaction_rate, "share of sentences with a ten-@ run")
        ->capture_default_str();
    gen->add_option("--semicolon-rate", spec.semicolon_rate, "share of sentences split by ';'")
        ->capture_default_str();
    gen->add_option("--pattern-rate", spec.pattern_rate, "share of sentences containing --pattern")
        ->capture_default_str();
    gen->add_option("--pattern", spec.pattern, "lowercase phrase to insert")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*stats) return run_command(stats_flags, diachron::cmd_stats);
        if (*freq) return run_command(freq_flags, diachron::cmd_freq);
        if (*compare) return run_command(compare_flags, diachron::cmd_compare_delimiters);
        if (*gen) {
            if (!gen_decades.empty()) {
                spec.decades.clear();
                for (auto d : diachron::split_list(gen_decades, ',')) spec.decades.push_back(std::stoi(std::string(d)));
            }
            if (!gen_genres.empty()) {
                spec.genres.clear();
                for (auto g : diachron::split_list(gen_genres, ',')) spec.genres.push_back(diachron::Genre::from_name(g));
            }
            for (auto item : diachron::split_list(gen_targets, ',')) {
                const auto colon = item.find(':');
                if (colon == std::string_view::npos) throw diachron::ConfigError("--target-means expects decade:mean");
                spec.target_mean[std::stoi(std::string(item.substr(0, colon)))] =
                    std::stod(std::string(item.substr(colon + 1)));
            }
            const auto manifest = diachron::cmd_gen(spec, gen_out);
            std::cerr << "generated " << manifest.files.size() << " files, " << manifest.total_sentences()
                      << " sentences, " << manifest.total_words() << " words in " << gen_out << '\n';
            return 0;
        }
    } catch (const diachron::Error& e) {
        std::cerr << "diachron: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "diachron: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
