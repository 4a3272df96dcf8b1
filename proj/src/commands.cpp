#include "diachron/commands.hpp"

#include <cstdio>
#include <ostream>

#include "diachron/errors.hpp"

namespace diachron {

namespace {

struct PreparedRun {
    ScanResult scan;
    PipelineOptions options;
};

PreparedRun prepare(const RunConfig& config) {
    config.validate();
    PreparedRun run;
    run.options = make_pipeline_options(config);
    run.scan = scan_for_run(config);
    return run;
}

void attach_scan(RunReport& report, const ScanResult& scan) {
    report.files_skipped_malformed += scan.skipped_malformed;
    report.warnings.insert(report.warnings.begin(), scan.warnings.begin(), scan.warnings.end());
}

}  // namespace

CommandOutput cmd_stats(const RunConfig& config) {
    auto run = prepare(config);
    auto result = run_pipeline(run.scan.documents, run.options, config.jobs);
    attach_scan(result.report, run.scan);

    CommandOutput out;
    out.tables.push_back(sentence_count_table(result));
    out.tables.push_back(summary_table(summarize_cells(result)));
    out.tables.push_back(run_report_table(result.report));
    out.report = std::move(result.report);
    return out;
}

CommandOutput cmd_freq(const RunConfig& config) {
    auto run = prepare(config);
    if (run.options.patterns.empty()) throw ConfigError("freq needs at least one --pattern or --patterns-file entry");
    auto result = run_pipeline(run.scan.documents, run.options, config.jobs);
    attach_scan(result.report, run.scan);

    CommandOutput out;
    for (std::size_t i = 0; i < run.options.patterns.size(); ++i) {
        const auto& pattern = run.options.patterns[i];
        auto series = frequency_series(result, pattern, i, /*group_by_genre=*/true, config.denominator);
        char index[8];
        std::snprintf(index, sizeof index, "%02zu", i + 1);
        out.tables.push_back(frequency_table(series, "freq_" + std::string(index) + "_" + pattern_slug(pattern)));
    }
    out.tables.push_back(run_report_table(result.report));
    out.report = std::move(result.report);
    return out;
}

CommandOutput cmd_compare_delimiters(const RunConfig& config) {
    auto run = prepare(config);
    auto cmp = compare_delimiter_modes(run.scan.documents, run.options, config.jobs);
    attach_scan(cmp.standard.report, run.scan);

    CommandOutput out;
    out.tables.push_back(comparison_table(cmp));
    out.tables.push_back(run_report_table(cmp.standard.report));
    out.report = std::move(cmp.standard.report);
    return out;
}

Manifest cmd_gen(const GeneratorSpec& spec, const std::filesystem::path& out_root) {
    return generate_corpus(spec, out_root);
}

void write_tables(const CommandOutput& output, const RunConfig& config, std::ostream& out) {
    if (config.out_dir) {
        for (const auto& table : output.tables) emit_report(table, config.output_format, *config.out_dir);
        return;
    }
    bool first = true;
    for (const auto& table : output.tables) {
        if (!first) out << '\n';
        first = false;
        out << "# " << table.name << '\n' << render(table, config.output_format);
    }
}

}  // namespace diachron
