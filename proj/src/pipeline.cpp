#include "diachron/pipeline.hpp"

#include <algorithm>

#include "diachron/errors.hpp"
#include "diachron/text.hpp"

namespace diachron {

Denominator parse_denominator(std::string_view name) {
    if (name == "kept") return Denominator::kept;
    if (name == "raw") return Denominator::raw;
    throw ConfigError("denominator must be raw or kept, got '" + std::string(name) + "'");
}

std::string_view to_string(Denominator d) { return d == Denominator::kept ? "kept" : "raw"; }

namespace {

void add_into(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
    if (into.size() < from.size()) into.resize(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

}  // namespace

void CellStats::merge(const CellStats& other) {
    lengths.merge(other.lengths);
    sentences_emitted += other.sentences_emitted;
    words_raw += other.words_raw;
    add_into(matches_kept, other.matches_kept);
    add_into(matches_raw, other.matches_raw);
}

void RunReport::merge(const RunReport& other) {
    documents += other.documents;
    files_skipped_malformed += other.files_skipped_malformed;
    files_io_error += other.files_io_error;
    decode_errors += other.decode_errors;
    sentences_emitted += other.sentences_emitted;
    sentences_kept += other.sentences_kept;
    filter += other.filter;
    words_raw += other.words_raw;
    words_kept += other.words_kept;
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

bool RunReport::conserved() const {
    return sentences_emitted == sentences_kept + filter.removed_redacted + filter.removed_short;
}

DocumentResult process_text(const DocumentRef& ref, std::string_view text, const PipelineOptions& options) {
    if (options.min_words < 1) throw ConfigError("min_words must be at least 1");
    DocumentResult out;
    out.key = GroupKey{ref.decade, ref.genre};
    auto& stats = out.stats;
    const std::size_t n_patterns = options.patterns.size();
    stats.matches_kept.assign(n_patterns, 0);
    stats.matches_raw.assign(n_patterns, 0);

    const auto tokens = split_whitespace(text);
    const auto ends = sentence_ends(tokens, options.mode, options.abbrevs);
    const std::span<const std::string_view> all(tokens);

    std::size_t begin = 0;
    for (std::size_t end : ends) {
        const auto sentence = all.subspan(begin, end - begin);
        begin = end;
        ++stats.sentences_emitted;
        const std::size_t words = word_count(sentence);
        stats.words_raw += words;

        bool kept = false;
        if (contains_redaction_run(sentence)) {
            ++out.filter.removed_redacted;
        } else if (words < options.min_words) {
            ++out.filter.removed_short;
        } else {
            kept = true;
            stats.lengths.accumulate(words);
        }
        for (std::size_t p = 0; p < n_patterns; ++p) {
            const auto m = count_matches(sentence, options.patterns[p]);
            stats.matches_raw[p] += m;
            if (kept) stats.matches_kept[p] += m;
        }
    }
    return out;
}

DocumentResult process_document(const DocumentRef& ref, const PipelineOptions& options) {
    auto loaded = load_document(ref, options.tags);
    auto result = process_text(ref, loaded.text, options);
    result.decode_errors = loaded.decode_errors;
    return result;
}

std::map<GroupKey, DistributionSummary> summarize_cells(const CorpusResult& result) {
    std::map<GroupKey, DistributionSummary> out;
    for (const auto& [key, cell] : result.cells) {
        if (!cell.lengths.empty()) out.emplace(key, summarize(cell.lengths));
    }
    return out;
}

DelimiterComparison compare_delimiter_modes(std::span<const DocumentRef> docs, const PipelineOptions& options,
                                            int jobs) {
    DelimiterComparison cmp;
    auto opts = options;
    opts.mode = DelimiterMode::standard;
    cmp.standard = run_pipeline(docs, opts, jobs);
    opts.mode = DelimiterMode::extended;
    cmp.extended = run_pipeline(docs, opts, jobs);

    auto fill = [&](const CorpusResult& r, bool extended) {
        for (const auto& [key, cell] : r.cells) {
            auto& row = cmp.cells[key];
            auto& emitted = extended ? row.extended_emitted : row.standard_emitted;
            emitted = cell.sentences_emitted;
            if (!cell.lengths.empty()) (extended ? row.extended : row.standard) = summarize(cell.lengths);
        }
    };
    fill(cmp.standard, false);
    fill(cmp.extended, true);
    return cmp;
}

FrequencySeries frequency_series(const CorpusResult& result, const TokenPattern& pattern, std::size_t pattern_index,
                                 bool group_by_genre, Denominator denominator) {
    if (result.cells.empty()) throw EmptyCorpus("no corpus cells to build a frequency series from");

    auto matches_of = [&](const CellStats& c) {
        const auto& v = denominator == Denominator::kept ? c.matches_kept : c.matches_raw;
        if (pattern_index >= v.size()) throw ConfigError("pattern index out of range");
        return v[pattern_index];
    };
    auto words_of = [&](const CellStats& c) { return denominator == Denominator::kept ? c.words_kept() : c.words_raw; };

    FrequencySeries series;
    series.pattern = pattern;
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> by_decade;
    for (const auto& [key, cell] : result.cells) {
        auto& [m, w] = by_decade[key.decade];
        m += matches_of(cell);
        w += words_of(cell);
    }
    for (const auto& [decade, mw] : by_decade) {
        series.rows.push_back({decade, std::nullopt, mw.first, mw.second, per_million(mw.first, mw.second)});
        if (!group_by_genre) continue;
        for (auto it = result.cells.lower_bound(GroupKey{decade, Genre::Kind::fiction});
             it != result.cells.end() && it->first.decade == decade; ++it) {
            const auto m = matches_of(it->second);
            const auto w = words_of(it->second);
            series.rows.push_back({decade, it->first.genre, m, w, per_million(m, w)});
        }
    }
    return series;
}

}  // namespace diachron
