#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diachron/frequency.hpp"
#include "diachron/histogram.hpp"
#include "diachron/pipeline.hpp"

namespace diachron {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view name);
std::string_view extension(OutputFormat f);

/// monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

struct Table {
    std::string name;  // file stem
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Fixed four-decimal formatting with "." as separator, independent of locale.
std::string format_fixed4(double value);

/// Header line plus one line per row. Reals use format_fixed4.
std::string to_csv(const Table& table);

/// Array of objects with keys in column order; reals at full precision.
std::string to_json(const Table& table);

std::string render(const Table& table, OutputFormat format);

/// Writes <dir>/<table.name>.<ext>, creating dir if needed. Throws IoError.
std::filesystem::path emit_report(const Table& table, OutputFormat format, const std::filesystem::path& dir);

Table sentence_count_table(const CorpusResult& result);
Table summary_table(const std::map<GroupKey, DistributionSummary>& summaries);
Table run_report_table(const RunReport& report);
Table frequency_table(const FrequencySeries& series, std::string name);
Table comparison_table(const DelimiterComparison& cmp);

/// "in order to" -> "in_order_to"; punctuation is spelled out.
std::string pattern_slug(const TokenPattern& pattern);

}  // namespace diachron
