#pragma once

// Corpus-level aggregation. `run_pipeline` is the OpenMP kernel path that
// tokenizes each document over string views; `run_pipeline_serial` is the
// reference path composed from the public per-sentence operations and is
// kept for cross-checking and benchmarking.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diachron/corpus.hpp"
#include "diachron/frequency.hpp"
#include "diachron/histogram.hpp"
#include "diachron/tokenizer.hpp"

namespace diachron {

/// Word total used to normalize pattern counts: words of kept sentences, or
/// every word in the documents.
enum class Denominator { kept, raw };

Denominator parse_denominator(std::string_view name);
std::string_view to_string(Denominator d);

struct PipelineOptions {
    DelimiterMode mode = DelimiterMode::standard;
    std::size_t min_words = 2;
    AbbreviationSet abbrevs;
    std::vector<std::string> tags = default_tag_set();
    std::vector<TokenPattern> patterns;
};

struct CellStats {
    LengthHistogram lengths;  // kept sentences only
    std::uint64_t sentences_emitted = 0;
    std::uint64_t words_raw = 0;
    std::vector<std::uint64_t> matches_kept;  // per pattern
    std::vector<std::uint64_t> matches_raw;   // per pattern, before filtering

    std::uint64_t words_kept() const { return lengths.total_words(); }
    void merge(const CellStats& other);

    friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct RunReport {
    std::uint64_t documents = 0;
    std::uint64_t files_skipped_malformed = 0;
    std::uint64_t files_io_error = 0;
    std::uint64_t decode_errors = 0;
    std::uint64_t sentences_emitted = 0;
    std::uint64_t sentences_kept = 0;
    FilterReport filter;
    std::uint64_t words_raw = 0;
    std::uint64_t words_kept = 0;
    std::vector<std::string> warnings;

    void merge(const RunReport& other);
    /// sentences_emitted == kept + removed_redacted + removed_short.
    bool conserved() const;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct CorpusResult {
    std::map<GroupKey, CellStats> cells;
    RunReport report;

    friend bool operator==(const CorpusResult&, const CorpusResult&) = default;
};

struct DocumentResult {
    GroupKey key;
    CellStats stats;
    FilterReport filter;
    std::uint64_t decode_errors = 0;
};

/// Per-document kernel over already cleaned text.
DocumentResult process_text(const DocumentRef& ref, std::string_view text, const PipelineOptions& options);

/// Loads the file, then runs process_text. Throws IoError.
DocumentResult process_document(const DocumentRef& ref, const PipelineOptions& options);

/// Parallel over documents with `jobs` workers. Output is independent of
/// `jobs` and of the order of `docs`.
CorpusResult run_pipeline(std::span<const DocumentRef> docs, const PipelineOptions& options, int jobs = 1);

/// Single-threaded reference built from tokenize_sentences, filter_sentences
/// and group_stats.
CorpusResult run_pipeline_serial(std::span<const DocumentRef> docs, const PipelineOptions& options);

/// Summaries of every cell with at least one kept sentence.
std::map<GroupKey, DistributionSummary> summarize_cells(const CorpusResult& result);

struct ModeComparison {
    std::optional<DistributionSummary> standard;
    std::optional<DistributionSummary> extended;
    std::uint64_t standard_emitted = 0;
    std::uint64_t extended_emitted = 0;
};

struct DelimiterComparison {
    std::map<GroupKey, ModeComparison> cells;
    CorpusResult standard;
    CorpusResult extended;
};

/// Runs the pipeline under both delimiter modes over the same document list.
DelimiterComparison compare_delimiter_modes(std::span<const DocumentRef> docs, const PipelineOptions& options,
                                            int jobs = 1);

/// Per-decade series for pattern `pattern_index` of the options the result
/// was produced with. Corpus-wide rows are always present; per-genre rows
/// follow when `group_by_genre`. Throws EmptyCorpus if there are no cells.
FrequencySeries frequency_series(const CorpusResult& result, const TokenPattern& pattern, std::size_t pattern_index,
                                 bool group_by_genre, Denominator denominator = Denominator::kept);

}  // namespace diachron
