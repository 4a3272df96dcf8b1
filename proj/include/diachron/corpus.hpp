#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "diachron/genre.hpp"

namespace diachron {

inline constexpr int kFirstYear = 1810;
inline constexpr int kLastYear = 2009;

/// Identity of one corpus file: <prefix>_<year>_<source id>.txt
struct DocumentRef {
    std::filesystem::path path;
    Genre genre;
    int year = 0;
    int decade = 0;
    std::string source_id;

    friend bool operator==(const DocumentRef&, const DocumentRef&) = default;
};

inline int decade_of(int year) { return year / 10 * 10; }

/// source_id -> genre overrides, applied after filename parsing.
using ReclassificationMap = std::map<std::string, Genre, std::less<>>;

/// Parses a bare filename. Throws MalformedFilename when the name does not
/// match <prefix>_<yyyy>_<digits>.txt or the year is outside 1810-2009.
/// Prefixes missing from `prefixes` yield Genre::unknown(prefix).
DocumentRef parse_filename(std::string_view name, const PrefixMap& prefixes = default_prefix_map());

/// Inverse of parse_filename. The prefix is the first map entry for the
/// genre (the label itself for unknown genres).
std::string format_filename(const DocumentRef& ref, const PrefixMap& prefixes = default_prefix_map());

struct ScanResult {
    std::vector<DocumentRef> documents;  // sorted by path
    std::vector<std::string> warnings;
    std::size_t skipped_malformed = 0;
};

/// Turns an arbitrary list of candidate .txt paths into sorted refs. The
/// result does not depend on the order of `files`.
ScanResult collect_documents(std::vector<std::filesystem::path> files, const PrefixMap& prefixes,
                             const ReclassificationMap& reclass);

/// Walks `root` recursively. Throws IoError if root is unreadable and
/// EmptyCorpus if no file yields a DocumentRef.
ScanResult scan_corpus(const std::filesystem::path& root, const PrefixMap& prefixes = default_prefix_map(),
                       const ReclassificationMap& reclass = {});

/// CSV with header "source_id,genre".
ReclassificationMap read_reclassification(const std::filesystem::path& csv);
ReclassificationMap parse_reclassification(std::string_view csv_text);

const std::vector<std::string>& default_tag_set();

/// Replaces every occurrence of each literal tag with a single space.
std::string strip_tags(std::string_view text, const std::vector<std::string>& tags = default_tag_set());

struct LoadedDocument {
    std::string text;
    std::size_t decode_errors = 0;
};

/// Reads the file as UTF-8 (invalid bytes replaced) and strips tags. Line
/// breaks are left in place. Throws IoError if the file cannot be read.
LoadedDocument load_document(const DocumentRef& ref, const std::vector<std::string>& tags = default_tag_set());

std::string read_file(const std::filesystem::path& path);

}  // namespace diachron
