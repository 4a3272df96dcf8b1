#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "diachron/config.hpp"
#include "diachron/generator.hpp"
#include "diachron/pipeline.hpp"
#include "diachron/report.hpp"

namespace diachron {

struct CommandOutput {
    std::vector<Table> tables;
    RunReport report;  // includes scan warnings
};

/// sentence_counts, length_summary and run_report tables.
CommandOutput cmd_stats(const RunConfig& config);

/// One freq_<nn>_<slug> table per pattern (corpus-wide and per-genre rows)
/// plus run_report. All patterns share a single pass over the corpus.
CommandOutput cmd_freq(const RunConfig& config);

/// compare_delimiters table plus the standard-mode run_report.
CommandOutput cmd_compare_delimiters(const RunConfig& config);

Manifest cmd_gen(const GeneratorSpec& spec, const std::filesystem::path& out_root);

/// Writes every table to config.out_dir, or renders them to `out` when no
/// output directory is set.
void write_tables(const CommandOutput& output, const RunConfig& config, std::ostream& out);

}  // namespace diachron
