#include "diachron/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "diachron/errors.hpp"

namespace fs = std::filesystem;

namespace diachron {

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ConfigError("format must be csv or json, got '" + std::string(name) + "'");
}

std::string_view extension(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::string format_fixed4(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 4);
    if (ec != std::errc{}) throw Error("cannot format value");
    std::string out(buf, end);
    if (out == "-0.0000") out = "0.0000";
    return out;
}

namespace {

std::string csv_field(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_fixed4(v); }
        std::string operator()(const std::string& s) const {
            if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
            std::string quoted = "\"";
            for (char c : s) {
                if (c == '"') quoted.push_back('"');
                quoted.push_back(c);
            }
            quoted.push_back('"');
            return quoted;
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, cell);
}

Cell opt_real(const std::optional<DistributionSummary>& s, double DistributionSummary::*field) {
    if (!s) return std::monostate{};
    return (*s).*field;
}

}  // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out.push_back(',');
        out += table.columns[i];
    }
    out.push_back('\n');
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += csv_field(row[i]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string to_json(const Table& table) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) obj[table.columns[i]] = json_value(row[i]);
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

std::string render(const Table& table, OutputFormat format) {
    return format == OutputFormat::csv ? to_csv(table) : to_json(table);
}

fs::path emit_report(const Table& table, OutputFormat format, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    auto path = dir / (table.name + "." + std::string(extension(format)));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << render(table, format);
    out.close();
    if (!out) throw IoError("write failed for " + path.string());
    return path;
}

Table sentence_count_table(const CorpusResult& result) {
    Table t{"sentence_counts", {"decade", "genre", "n"}, {}};
    for (const auto& [key, cell] : result.cells) {
        if (cell.lengths.empty()) continue;
        t.rows.push_back({std::int64_t{key.decade}, key.genre.name(), cell.lengths.n()});
    }
    return t;
}

Table summary_table(const std::map<GroupKey, DistributionSummary>& summaries) {
    Table t{"length_summary",
            {"decade", "genre", "n", "mean", "median", "q1", "q3", "whisker_low", "whisker_high", "min", "max"},
            {}};
    for (const auto& [key, s] : summaries) {
        t.rows.push_back({std::int64_t{key.decade}, key.genre.name(), s.n, s.mean, s.median, s.q1, s.q3, s.whisker_low,
                          s.whisker_high, s.min, s.max});
    }
    return t;
}

Table run_report_table(const RunReport& r) {
    Table t{"run_report", {"key", "value"}, {}};
    auto add = [&](const char* key, std::uint64_t v) { t.rows.push_back({std::string(key), v}); };
    add("documents", r.documents);
    add("files_skipped_malformed", r.files_skipped_malformed);
    add("files_io_error", r.files_io_error);
    add("decode_errors", r.decode_errors);
    add("sentences_emitted", r.sentences_emitted);
    add("sentences_kept", r.sentences_kept);
    add("removed_redacted", r.filter.removed_redacted);
    add("removed_short", r.filter.removed_short);
    add("words_raw", r.words_raw);
    add("words_kept", r.words_kept);
    add("warnings", r.warnings.size());
    return t;
}

Table frequency_table(const FrequencySeries& series, std::string name) {
    Table t{std::move(name), {"pattern", "decade", "genre", "match_count", "word_total", "per_million"}, {}};
    const auto text = series.pattern.text();
    for (const auto& row : series.rows) {
        t.rows.push_back({text, std::int64_t{row.decade}, row.genre ? row.genre->name() : std::string("all"),
                          row.match_count, row.word_total, row.per_million});
    }
    return t;
}

Table comparison_table(const DelimiterComparison& cmp) {
    Table t{"compare_delimiters",
            {"decade", "genre", "standard_emitted", "standard_n", "standard_mean", "standard_median", "standard_q1",
             "standard_q3", "extended_emitted", "extended_n", "extended_mean", "extended_median", "extended_q1",
             "extended_q3", "delta_n", "delta_mean"},
            {}};
    for (const auto& [key, row] : cmp.cells) {
        const std::uint64_t std_n = row.standard ? row.standard->n : 0;
        const std::uint64_t ext_n = row.extended ? row.extended->n : 0;
        Cell delta_mean = std::monostate{};
        if (row.standard && row.extended) delta_mean = row.extended->mean - row.standard->mean;
        t.rows.push_back({std::int64_t{key.decade}, key.genre.name(), row.standard_emitted, std_n,
                          opt_real(row.standard, &DistributionSummary::mean),
                          opt_real(row.standard, &DistributionSummary::median),
                          opt_real(row.standard, &DistributionSummary::q1),
                          opt_real(row.standard, &DistributionSummary::q3), row.extended_emitted, ext_n,
                          opt_real(row.extended, &DistributionSummary::mean),
                          opt_real(row.extended, &DistributionSummary::median),
                          opt_real(row.extended, &DistributionSummary::q1),
                          opt_real(row.extended, &DistributionSummary::q3),
                          static_cast<std::int64_t>(ext_n) - static_cast<std::int64_t>(std_n), delta_mean});
    }
    return t;
}

std::string pattern_slug(const TokenPattern& pattern) {
    std::string slug;
    auto sep = [&] {
        if (!slug.empty() && slug.back() != '_') slug.push_back('_');
    };
    for (const auto& token : pattern.tokens) {
        sep();
        for (char c : token) {
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
                slug.push_back(c);
                continue;
            }
            if (c >= 'A' && c <= 'Z') {
                slug.push_back(static_cast<char>(c - 'A' + 'a'));
                continue;
            }
            const char* name = nullptr;
            switch (c) {
                case ';': name = "semicolon"; break;
                case ':': name = "colon"; break;
                case '.': name = "period"; break;
                case ',': name = "comma"; break;
                case '!': name = "exclamation"; break;
                case '?': name = "question"; break;
                default: break;
            }
            sep();
            if (name) {
                slug += name;
            } else {
                char hex[4];
                std::snprintf(hex, sizeof hex, "%02x", static_cast<unsigned char>(c));
                slug += hex;
            }
            slug.push_back('_');
        }
    }
    while (!slug.empty() && slug.back() == '_') slug.pop_back();
    return slug.empty() ? "pattern" : slug;
}

}  // namespace diachron
