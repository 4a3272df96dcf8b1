#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "diachron/genre.hpp"
#include "diachron/tokenizer.hpp"

namespace diachron {

/// Aggregation cell: one decade of one genre.
struct GroupKey {
    int decade = 0;
    Genre genre;

    friend bool operator==(const GroupKey&, const GroupKey&) = default;
    friend std::strong_ordering operator<=>(const GroupKey&, const GroupKey&) = default;
};

/// Exact histogram of sentence lengths. Integer-only, so merging is
/// lossless and independent of order.
class LengthHistogram {
public:
    /// Throws NonPositiveLength for length 0.
    void accumulate(std::uint64_t length, std::uint64_t times = 1);
    void merge(const LengthHistogram& other);

    std::uint64_t n() const { return n_; }
    std::uint64_t total_words() const { return total_words_; }
    bool empty() const { return n_ == 0; }

    /// Sentences of exactly `length` words.
    std::uint64_t count(std::uint64_t length) const { return length < counts_.size() ? counts_[length] : 0; }
    std::uint64_t max_length() const { return counts_.empty() ? 0 : counts_.size() - 1; }
    std::uint64_t min_length() const;

    /// Value at 0-based rank in the sorted expansion.
    std::uint64_t value_at_rank(std::uint64_t rank) const;

    /// Dense counts indexed by length; index 0 is always zero.
    std::span<const std::uint64_t> counts() const { return counts_; }

    friend bool operator==(const LengthHistogram&, const LengthHistogram&) = default;

private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t n_ = 0;
    std::uint64_t total_words_ = 0;
};

LengthHistogram merge(LengthHistogram a, const LengthHistogram& b);

/// Box-plot statistics. Quartiles are Tukey hinges; whiskers are the most
/// extreme data values inside [q1 - 1.5 IQR, q3 + 1.5 IQR].
struct DistributionSummary {
    std::uint64_t n = 0;
    double mean = 0;
    double median = 0;
    double q1 = 0;
    double q3 = 0;
    double whisker_low = 0;
    double whisker_high = 0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;

    friend bool operator==(const DistributionSummary&, const DistributionSummary&) = default;
};

/// Throws EmptyHistogram when n == 0.
DistributionSummary summarize(const LengthHistogram& hist);

/// Share of sentences with lo <= length <= hi. Throws EmptyHistogram or
/// InvalidRange (unless 1 <= lo <= hi).
double bucket_share(const LengthHistogram& hist, std::uint64_t lo, std::uint64_t hi);
std::uint64_t bucket_count(const LengthHistogram& hist, std::uint64_t lo, std::uint64_t hi);

/// Routes each sentence to the cell of its document. Sentences without a
/// document are rejected with ConfigError.
std::map<GroupKey, LengthHistogram> group_stats(std::span<const Sentence> sentences);

}  // namespace diachron
