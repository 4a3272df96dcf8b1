#include <omp.h>

#include <algorithm>
#include <utility>

#include "diachron/errors.hpp"
#include "diachron/pipeline.hpp"

namespace diachron {

namespace {

struct WorkerState {
    std::map<GroupKey, CellStats> cells;
    RunReport report;
    std::vector<std::pair<std::size_t, std::string>> failures;  // doc index, message
};

}  // namespace

CorpusResult run_pipeline(std::span<const DocumentRef> docs, const PipelineOptions& options, int jobs) {
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
    if (options.min_words < 1) throw ConfigError("min_words must be at least 1");

    const auto n_docs = static_cast<std::int64_t>(docs.size());
    const int workers = static_cast<int>(std::min<std::int64_t>(jobs, std::max<std::int64_t>(n_docs, 1)));
    std::vector<WorkerState> states(static_cast<std::size_t>(workers));

#pragma omp parallel num_threads(workers)
    {
        auto& state = states[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < n_docs; ++i) {
            const auto& ref = docs[static_cast<std::size_t>(i)];
            ++state.report.documents;
            try {
                auto doc = process_document(ref, options);
                state.report.decode_errors += doc.decode_errors;
                state.report.sentences_emitted += doc.stats.sentences_emitted;
                state.report.sentences_kept += doc.stats.lengths.n();
                state.report.filter += doc.filter;
                state.report.words_raw += doc.stats.words_raw;
                state.report.words_kept += doc.stats.words_kept();
                state.cells[doc.key].merge(doc.stats);
            } catch (const IoError& e) {
                ++state.report.files_io_error;
                state.failures.emplace_back(static_cast<std::size_t>(i), e.what());
            }
        }
    }

    // Thread-order reduction; all sums are integer so the result does not
    // depend on which thread processed which document.
    CorpusResult result;
    std::vector<std::pair<std::size_t, std::string>> failures;
    for (auto& state : states) {
        for (auto& [key, cell] : state.cells) result.cells[key].merge(cell);
        result.report.merge(state.report);
        failures.insert(failures.end(), state.failures.begin(), state.failures.end());
    }
    std::sort(failures.begin(), failures.end(), [&](const auto& a, const auto& b) {
        return docs[a.first].path < docs[b.first].path;
    });
    for (auto& [index, message] : failures) result.report.warnings.push_back(std::move(message));
    return result;
}

}  // namespace diachron
