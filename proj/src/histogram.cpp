#include "diachron/histogram.hpp"

#include <algorithm>
#include <string>

#include "diachron/errors.hpp"

namespace diachron {

void LengthHistogram::accumulate(std::uint64_t length, std::uint64_t times) {
    if (length == 0) throw NonPositiveLength("sentence length must be at least 1");
    if (times == 0) return;
    if (counts_.size() <= length) counts_.resize(length + 1, 0);
    counts_[length] += times;
    n_ += times;
    total_words_ += length * times;
}

void LengthHistogram::merge(const LengthHistogram& other) {
    if (counts_.size() < other.counts_.size()) counts_.resize(other.counts_.size(), 0);
    for (std::size_t len = 0; len < other.counts_.size(); ++len) counts_[len] += other.counts_[len];
    n_ += other.n_;
    total_words_ += other.total_words_;
}

std::uint64_t LengthHistogram::min_length() const {
    for (std::size_t len = 1; len < counts_.size(); ++len) {
        if (counts_[len] != 0) return len;
    }
    return 0;
}

std::uint64_t LengthHistogram::value_at_rank(std::uint64_t rank) const {
    if (rank >= n_) throw InvalidRange("rank " + std::to_string(rank) + " outside histogram of size " + std::to_string(n_));
    std::uint64_t seen = 0;
    for (std::size_t len = 1; len < counts_.size(); ++len) {
        seen += counts_[len];
        if (rank < seen) return len;
    }
    return max_length();  // unreachable while n_ == sum(counts_)
}

LengthHistogram merge(LengthHistogram a, const LengthHistogram& b) {
    a.merge(b);
    return a;
}

namespace {

// Median of ranks [first, first + size) of the sorted expansion.
double median_of_ranks(const LengthHistogram& h, std::uint64_t first, std::uint64_t size) {
    const std::uint64_t mid = first + size / 2;
    if (size % 2 == 1) return static_cast<double>(h.value_at_rank(mid));
    return (static_cast<double>(h.value_at_rank(mid - 1)) + static_cast<double>(h.value_at_rank(mid))) / 2.0;
}

}  // namespace

DistributionSummary summarize(const LengthHistogram& hist) {
    if (hist.empty()) throw EmptyHistogram("cannot summarize an empty histogram");
    const std::uint64_t n = hist.n();

    DistributionSummary s;
    s.n = n;
    s.mean = static_cast<double>(hist.total_words()) / static_cast<double>(n);
    s.median = median_of_ranks(hist, 0, n);
    // Tukey hinges: each half includes the median when n is odd.
    const std::uint64_t half = (n + 1) / 2;
    s.q1 = median_of_ranks(hist, 0, half);
    s.q3 = median_of_ranks(hist, n - half, half);
    s.min = hist.min_length();
    s.max = hist.max_length();

    const double iqr = s.q3 - s.q1;
    const double low_fence = s.q1 - 1.5 * iqr;
    const double high_fence = s.q3 + 1.5 * iqr;
    const auto counts = hist.counts();
    for (std::size_t len = 1; len < counts.size(); ++len) {
        if (counts[len] != 0 && static_cast<double>(len) >= low_fence) {
            s.whisker_low = static_cast<double>(len);
            break;
        }
    }
    for (std::size_t len = counts.size(); len-- > 1;) {
        if (counts[len] != 0 && static_cast<double>(len) <= high_fence) {
            s.whisker_high = static_cast<double>(len);
            break;
        }
    }
    return s;
}

std::uint64_t bucket_count(const LengthHistogram& hist, std::uint64_t lo, std::uint64_t hi) {
    if (lo < 1 || lo > hi) {
        throw InvalidRange("bucket range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is invalid");
    }
    std::uint64_t total = 0;
    const auto counts = hist.counts();
    for (std::uint64_t len = lo; len <= hi && len < counts.size(); ++len) total += counts[len];
    return total;
}

double bucket_share(const LengthHistogram& hist, std::uint64_t lo, std::uint64_t hi) {
    if (hist.empty()) throw EmptyHistogram("bucket share of an empty histogram");
    return static_cast<double>(bucket_count(hist, lo, hi)) / static_cast<double>(hist.n());
}

std::map<GroupKey, LengthHistogram> group_stats(std::span<const Sentence> sentences) {
    std::map<GroupKey, LengthHistogram> cells;
    for (const auto& s : sentences) {
        if (!s.doc) throw ConfigError("sentence has no originating document");
        cells[GroupKey{s.doc->decade, s.doc->genre}].accumulate(s.word_count);
    }
    return cells;
}

}  // namespace diachron
