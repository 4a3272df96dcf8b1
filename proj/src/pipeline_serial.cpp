#include <algorithm>
#include <memory>

#include "diachron/errors.hpp"
#include "diachron/pipeline.hpp"

namespace diachron {

CorpusResult run_pipeline_serial(std::span<const DocumentRef> input, const PipelineOptions& options) {
    if (options.min_words < 1) throw ConfigError("min_words must be at least 1");
    std::vector<DocumentRef> docs(input.begin(), input.end());
    std::sort(docs.begin(), docs.end(), [](const auto& a, const auto& b) { return a.path < b.path; });

    CorpusResult result;
    const std::size_t n_patterns = options.patterns.size();
    for (const auto& ref : docs) {
        ++result.report.documents;
        LoadedDocument loaded;
        try {
            loaded = load_document(ref, options.tags);
        } catch (const IoError& e) {
            ++result.report.files_io_error;
            result.report.warnings.emplace_back(e.what());
            continue;
        }
        result.report.decode_errors += loaded.decode_errors;

        auto shared = std::make_shared<const DocumentRef>(ref);
        auto sentences = tokenize_sentences(loaded.text, options.mode, options.abbrevs);
        for (auto& s : sentences) s.doc = shared;

        auto& cell = result.cells[GroupKey{ref.decade, ref.genre}];
        cell.matches_kept.resize(n_patterns, 0);
        cell.matches_raw.resize(n_patterns, 0);
        cell.sentences_emitted += sentences.size();
        result.report.sentences_emitted += sentences.size();
        for (const auto& s : sentences) {
            cell.words_raw += s.word_count;
            result.report.words_raw += s.word_count;
            for (std::size_t p = 0; p < n_patterns; ++p) cell.matches_raw[p] += count_matches(s.tokens, options.patterns[p]);
        }

        auto filtered = filter_sentences(std::move(sentences), options.min_words);
        result.report.filter += filtered.report;
        result.report.sentences_kept += filtered.kept.size();
        for (const auto& s : filtered.kept) {
            result.report.words_kept += s.word_count;
            for (std::size_t p = 0; p < n_patterns; ++p) cell.matches_kept[p] += count_matches(s.tokens, options.patterns[p]);
        }
        for (const auto& [key, hist] : group_stats(filtered.kept)) cell.lengths.merge(hist);
    }
    return result;
}

}  // namespace diachron
