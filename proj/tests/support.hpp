#pragma once

// Shared test helpers: scratch directories, fixture loading, and the
// independent oracles the implementation is checked against.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "diachron/histogram.hpp"

namespace testing {

namespace fs = std::filesystem;

class TempDir {
public:
    explicit TempDir(const std::string& tag = "diachron") {
        std::random_device rd;
        path_ = fs::temp_directory_path() / (tag + "_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    fs::path path_;
};

inline void write_file(const fs::path& path, const std::string& bytes) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << bytes;
}

inline std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline nlohmann::json tokenization_cases() {
    std::ifstream in(fs::path(DIACHRON_TEST_DATA_DIR) / "tokenization_cases.json");
    return nlohmann::json::parse(in);
}

inline std::vector<std::string> split_spaces(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// Copies every file under `from` into `to`, writing them in reverse path
/// order so directory enumeration order differs from the original.
inline void copy_tree_shuffled(const fs::path& from, const fs::path& to, std::uint64_t seed) {
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(from)) {
        if (e.is_regular_file()) files.push_back(fs::relative(e.path(), from));
    }
    std::mt19937_64 rng(seed);
    std::shuffle(files.begin(), files.end(), rng);
    for (const auto& rel : files) {
        fs::create_directories((to / rel).parent_path());
        fs::copy_file(from / rel, to / rel, fs::copy_options::overwrite_existing);
    }
}

// ---------------------------------------------------------------------------
// Oracles

/// Box-plot statistics straight from a sorted list, using Tukey's depth
/// formulation: median depth (n+1)/2, hinge depth (floor(median depth)+1)/2,
/// counted from each end.
inline diachron::DistributionSummary brute_force_summary(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    auto at_depth_low = [&](double depth) {
        const auto lo = static_cast<std::size_t>(depth);  // 1-based
        if (depth == static_cast<double>(lo)) return static_cast<double>(values[lo - 1]);
        return (static_cast<double>(values[lo - 1]) + static_cast<double>(values[lo])) / 2.0;
    };
    auto at_depth_high = [&](double depth) {
        const auto lo = static_cast<std::size_t>(depth);
        if (depth == static_cast<double>(lo)) return static_cast<double>(values[n - lo]);
        return (static_cast<double>(values[n - lo]) + static_cast<double>(values[n - lo - 1])) / 2.0;
    };
    const double median_depth = (static_cast<double>(n) + 1.0) / 2.0;
    const double hinge_depth = (static_cast<double>(static_cast<std::size_t>(median_depth)) + 1.0) / 2.0;

    diachron::DistributionSummary s;
    s.n = n;
    std::uint64_t total = 0;
    for (auto v : values) total += v;
    s.mean = static_cast<double>(total) / static_cast<double>(n);
    s.median = at_depth_low(median_depth);
    s.q1 = at_depth_low(hinge_depth);
    s.q3 = at_depth_high(hinge_depth);
    s.min = values.front();
    s.max = values.back();
    const double iqr = s.q3 - s.q1;
    s.whisker_low = static_cast<double>(values.back());
    s.whisker_high = static_cast<double>(values.front());
    for (auto v : values) {
        const auto x = static_cast<double>(v);
        if (x >= s.q1 - 1.5 * iqr) s.whisker_low = std::min(s.whisker_low, x);
        if (x <= s.q3 + 1.5 * iqr) s.whisker_high = std::max(s.whisker_high, x);
    }
    return s;
}

inline std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline bool ascii_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

/// Naive matcher for ASCII tokens, written independently of count_matches:
/// compares every window token by token, splitting the final corpus token
/// into (word part, trailing punctuation).
inline std::uint64_t naive_count(const std::vector<std::string>& tokens, const std::vector<std::string>& pattern,
                                 bool case_sensitive) {
    auto norm = [&](const std::string& s) { return case_sensitive ? s : lower(s); };
    bool pattern_has_word = false;
    for (const auto& p : pattern) {
        for (char c : p) pattern_has_word |= ascii_alnum(c);
    }
    std::uint64_t total = 0;
    if (pattern.empty() || tokens.size() < pattern.size()) return 0;
    for (std::size_t i = 0; i + pattern.size() <= tokens.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j + 1 < pattern.size(); ++j) {
            if (norm(tokens[i + j]) != norm(pattern[j])) ok = false;
        }
        if (!ok) continue;
        const std::string tok = norm(tokens[i + pattern.size() - 1]);
        const std::string want = norm(pattern.back());
        std::string head = tok;
        std::string tail;
        while (!head.empty() && !ascii_alnum(head.back())) {
            tail.insert(tail.begin(), head.back());
            head.pop_back();
        }
        bool last_ok = tok == want;
        if (!last_ok && !head.empty() && !tail.empty()) {
            last_ok = (pattern.size() == 1 && !pattern_has_word) ? tail == want : head == want;
        }
        if (last_ok) ++total;
    }
    return total;
}

inline bool naive_redaction_run(const std::vector<std::string>& tokens) {
    for (std::size_t i = 0; i + 10 <= tokens.size(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < 10; ++j) all = all && tokens[i + j] == "@";
        if (all) return true;
    }
    return false;
}

}  // namespace testing
