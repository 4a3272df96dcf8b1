#include "diachron/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "diachron/errors.hpp"
#include "diachron/text.hpp"

namespace fs = std::filesystem;

namespace diachron {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool all_alpha(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); });
}

}  // namespace

DocumentRef parse_filename(std::string_view name, const PrefixMap& prefixes) {
    auto fail = [&](const char* why) -> MalformedFilename {
        return MalformedFilename("'" + std::string(name) + "': " + why);
    };
    constexpr std::string_view ext = ".txt";
    if (!name.ends_with(ext)) throw fail("expected .txt extension");
    const auto stem = name.substr(0, name.size() - ext.size());

    const auto first = stem.find('_');
    const auto second = first == std::string_view::npos ? first : stem.find('_', first + 1);
    if (second == std::string_view::npos) throw fail("expected <prefix>_<year>_<id>");
    const auto prefix = stem.substr(0, first);
    const auto year_text = stem.substr(first + 1, second - first - 1);
    const auto id = stem.substr(second + 1);
    if (!all_alpha(prefix)) throw fail("prefix must be letters");
    if (year_text.size() != 4 || !all_digits(year_text)) throw fail("year must be four digits");
    if (!all_digits(id)) throw fail("source id must be digits");

    int year = 0;
    std::from_chars(year_text.data(), year_text.data() + year_text.size(), year);
    if (year < kFirstYear || year > kLastYear) throw fail("year outside 1810-2009");

    DocumentRef ref;
    auto it = prefixes.find(prefix);
    ref.genre = it != prefixes.end() ? it->second : Genre::unknown(std::string(prefix));
    ref.year = year;
    ref.decade = decade_of(year);
    ref.source_id = std::string(id);
    return ref;
}

std::string format_filename(const DocumentRef& ref, const PrefixMap& prefixes) {
    std::string prefix;
    if (ref.genre.is_unknown()) {
        prefix = ref.genre.label();
    } else {
        auto it = std::find_if(prefixes.begin(), prefixes.end(), [&](const auto& kv) { return kv.second == ref.genre; });
        if (it == prefixes.end()) throw ConfigError("no filename prefix for genre " + ref.genre.name());
        prefix = it->first;
    }
    return prefix + "_" + std::to_string(ref.year) + "_" + ref.source_id + ".txt";
}

ScanResult collect_documents(std::vector<fs::path> files, const PrefixMap& prefixes,
                             const ReclassificationMap& reclass) {
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());

    ScanResult result;
    for (auto& file : files) {
        DocumentRef ref;
        try {
            ref = parse_filename(file.filename().string(), prefixes);
        } catch (const MalformedFilename& e) {
            result.warnings.push_back(std::string("skipping ") + e.what());
            ++result.skipped_malformed;
            continue;
        }
        if (auto it = reclass.find(ref.source_id); it != reclass.end()) ref.genre = it->second;

        const auto folder = file.parent_path().filename().string();
        if (folder.size() == 4 && all_digits(folder) && std::stoi(folder) != ref.decade) {
            result.warnings.push_back(file.string() + ": folder " + folder + " disagrees with filename decade " +
                                      std::to_string(ref.decade));
        }
        ref.path = std::move(file);
        result.documents.push_back(std::move(ref));
    }
    return result;
}

ScanResult scan_corpus(const fs::path& root, const PrefixMap& prefixes, const ReclassificationMap& reclass) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw IoError("corpus root is not a readable directory: " + root.string());

    std::vector<fs::path> files;
    fs::recursive_directory_iterator it(root, fs::directory_options::follow_directory_symlink, ec);
    if (ec) throw IoError("cannot read corpus root " + root.string() + ": " + ec.message());
    for (const auto& entry : it) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }

    auto result = collect_documents(std::move(files), prefixes, reclass);
    if (result.documents.empty()) throw EmptyCorpus("no recognizable corpus files under " + root.string());
    return result;
}

ReclassificationMap parse_reclassification(std::string_view csv_text) {
    ReclassificationMap map;
    std::istringstream in{std::string(csv_text)};
    std::string line;
    bool header = true;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto row = trim(line);
        if (row.empty()) continue;
        if (header) {
            if (row != "source_id,genre") throw ConfigError("reclassification header must be 'source_id,genre'");
            header = false;
            continue;
        }
        const auto comma = row.find(',');
        if (comma == std::string_view::npos) {
            throw ConfigError("reclassification line " + std::to_string(line_no) + ": expected source_id,genre");
        }
        const auto id = trim(row.substr(0, comma));
        if (!all_digits(id)) throw ConfigError("reclassification line " + std::to_string(line_no) + ": bad source id");
        map.insert_or_assign(std::string(id), Genre::from_name(trim(row.substr(comma + 1))));
    }
    if (header) throw ConfigError("reclassification file is empty");
    return map;
}

ReclassificationMap read_reclassification(const fs::path& csv) { return parse_reclassification(read_file(csv)); }

const std::vector<std::string>& default_tag_set() {
    static const std::vector<std::string> tags{"<P>", "<p>"};
    return tags;
}

std::string strip_tags(std::string_view text, const std::vector<std::string>& tags) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        bool matched = false;
        for (const auto& tag : tags) {
            if (!tag.empty() && text.compare(i, tag.size(), tag) == 0) {
                out.push_back(' ');
                i += tag.size();
                matched = true;
                break;
            }
        }
        if (!matched) out.push_back(text[i++]);
    }
    return out;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed for " + path.string());
    return bytes;
}

LoadedDocument load_document(const DocumentRef& ref, const std::vector<std::string>& tags) {
    auto decoded = repair_utf8(read_file(ref.path));
    return {strip_tags(decoded.text, tags), decoded.decode_errors};
}

}  // namespace diachron
