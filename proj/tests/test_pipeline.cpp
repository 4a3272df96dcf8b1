#include <doctest.h>

#include <random>

#include "diachron/errors.hpp"
#include "diachron/generator.hpp"
#include "diachron/pipeline.hpp"
#include "support.hpp"

using namespace diachron;
using testing::TempDir;
using testing::write_file;

namespace {

DocumentRef doc_at(const std::filesystem::path& root, const std::string& name) {
    auto ref = parse_filename(name);
    ref.path = root / name;
    return ref;
}

GeneratorSpec small_spec(std::uint64_t seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.decades = {1850, 1950};
    spec.docs_per_cell = 3;
    spec.sentences_per_doc = 60;
    spec.redaction_rate = 0.05;
    spec.semicolon_rate = 0.2;
    spec.pattern_rate = 0.1;
    return spec;
}

PipelineOptions with_patterns(std::initializer_list<const char*> patterns) {
    PipelineOptions opts;
    for (auto p : patterns) opts.patterns.push_back(TokenPattern::parse(p));
    return opts;
}

}  // namespace

TEST_CASE("single document statistics") {
    TempDir dir;
    write_file(dir / "fic_1901_1.txt", "Hi there. Bye now.");
    const std::vector<DocumentRef> docs{doc_at(dir.path(), "fic_1901_1.txt")};
    auto result = run_pipeline(docs, PipelineOptions{});
    REQUIRE(result.cells.size() == 1);
    const auto& cell = result.cells.at(GroupKey{1900, Genre::Kind::fiction});
    CHECK(cell.lengths.n() == 2);
    CHECK(summarize(cell.lengths).mean == 2.0);
    CHECK(result.report.conserved());
    CHECK(result == run_pipeline_serial(docs, PipelineOptions{}));
}

TEST_CASE("serial reference and parallel kernel agree") {
    TempDir dir;
    auto manifest = generate_corpus(small_spec(7), dir.path());
    write_file(dir / "1850/nf_1851_900001.txt", "Bad \xFF bytes here. <P> Mr. Smith came; he left. Art.1 Short.");
    write_file(dir / "1950/fic_1952_900002.txt", "");
    auto scan = scan_corpus(dir.path());

    for (auto mode : {DelimiterMode::standard, DelimiterMode::extended}) {
        auto opts = with_patterns({"in order to", ";", "he"});
        opts.mode = mode;
        const auto serial = run_pipeline_serial(scan.documents, opts);
        for (int jobs : {1, 2, 8}) {
            CAPTURE(jobs);
            CHECK(run_pipeline(scan.documents, opts, jobs) == serial);
        }
        CHECK(serial.report.conserved());
        CHECK(serial.report.decode_errors == 1);
    }
}

TEST_CASE("order of documents does not matter") {
    TempDir dir;
    generate_corpus(small_spec(3), dir.path());
    auto docs = scan_corpus(dir.path()).documents;
    const auto opts = with_patterns({";"});
    const auto base = run_pipeline(docs, opts, 2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(docs.begin(), docs.end(), rng);
        CHECK(run_pipeline(docs, opts, 3) == base);
    }

    TempDir copy;
    testing::copy_tree_shuffled(dir.path(), copy.path(), 11);
    auto copied = run_pipeline(scan_corpus(copy.path()).documents, opts, 1);
    // Paths differ, everything else is identical.
    CHECK(copied.cells == base.cells);
    CHECK(copied.report.sentences_kept == base.report.sentences_kept);
}

TEST_CASE("pipeline matches the generator manifest") {
    TempDir dir;
    auto spec = small_spec(21);
    spec.sentences_per_doc = 200;
    auto manifest = generate_corpus(spec, dir.path());
    auto opts = with_patterns({"in order to", ";"});
    auto result = run_pipeline(scan_corpus(dir.path()).documents, opts, 2);

    REQUIRE(result.cells.size() == manifest.cells.size());
    for (const auto& mc : manifest.cells) {
        const auto& cell = result.cells.at(GroupKey{mc.decade, mc.genre});
        CHECK(cell.lengths.n() == mc.sentences);
        CHECK(cell.words_kept() == mc.words);
        const auto s = summarize(cell.lengths);
        CHECK(s.mean == doctest::Approx(mc.mean).epsilon(1e-12));
        CHECK(s.median == mc.median);
        CHECK(cell.matches_kept[0] == mc.pattern_count);
        CHECK(cell.matches_kept[1] == mc.semicolons);
    }
    std::uint64_t redacted = 0;
    for (const auto& mc : manifest.cells) redacted += mc.redacted_sentences;
    CHECK(result.report.filter.removed_redacted == redacted);
    CHECK(result.report.filter.removed_short == 0);
    CHECK(result.report.sentences_kept == manifest.total_sentences());
}

TEST_CASE("unreadable files are counted and skipped") {
    TempDir dir;
    write_file(dir / "fic_1901_1.txt", "Hi there. Bye now.");
    std::vector<DocumentRef> docs{doc_at(dir.path(), "fic_1901_1.txt"), doc_at(dir.path(), "fic_1902_2.txt")};
    for (int jobs : {1, 4}) {
        auto result = run_pipeline(docs, PipelineOptions{}, jobs);
        CHECK(result.report.files_io_error == 1);
        CHECK(result.report.documents == 2);
        CHECK(result.report.sentences_kept == 2);
        REQUIRE(result.report.warnings.size() == 1);
        CHECK(result.report.warnings[0].find("fic_1902_2.txt") != std::string::npos);
        CHECK(result == run_pipeline_serial(docs, PipelineOptions{}));
    }
}

TEST_CASE("delimiter comparison") {
    TempDir dir;
    SUBCASE("semicolon splits a sentence") {
        write_file(dir / "fic_1901_1.txt", "A b; c d. E f.");
        const std::vector<DocumentRef> docs{doc_at(dir.path(), "fic_1901_1.txt")};
        auto cmp = compare_delimiter_modes(docs, PipelineOptions{});
        const auto& cell = cmp.cells.at(GroupKey{1900, Genre::Kind::fiction});
        REQUIRE(cell.standard);
        REQUIRE(cell.extended);
        CHECK(cell.standard->n == 2);
        CHECK(cell.standard->mean == 3.0);
        CHECK(cell.extended->n == 3);
        CHECK(cell.extended->mean == 2.0);
    }
    SUBCASE("no semicolons or colons: modes agree") {
        write_file(dir / "fic_1901_1.txt", "One two three. Four five! Six seven eight nine?");
        const std::vector<DocumentRef> docs{doc_at(dir.path(), "fic_1901_1.txt")};
        auto cmp = compare_delimiter_modes(docs, PipelineOptions{});
        CHECK(cmp.standard.cells == cmp.extended.cells);
    }
    SUBCASE("generated corpora obey the law") {
        auto spec = small_spec(99);
        auto manifest = generate_corpus(spec, dir.path());
        auto cmp = compare_delimiter_modes(scan_corpus(dir.path()).documents, PipelineOptions{}, 2);
        for (const auto& [key, mc] : cmp.cells) {
            REQUIRE(mc.standard);
            REQUIRE(mc.extended);
            CHECK(mc.extended->n >= mc.standard->n);
            CHECK(mc.extended->mean <= mc.standard->mean);
            const bool has_semicolons = cmp.standard.cells.at(key).sentences_emitted != mc.extended_emitted;
            CHECK(has_semicolons == (mc.extended->n != mc.standard->n));
        }
    }
}

TEST_CASE("frequency series") {
    TempDir dir;
    SUBCASE("five semicolons in a thousand words") {
        std::string text;
        for (int s = 0; s < 100; ++s) {
            text += s < 5 ? "Alpha beta gamma delta epsilon ; zeta eta theta iota kappa . "
                          : "Alpha beta gamma delta epsilon zeta eta theta iota kappa. ";
        }
        write_file(dir / "mag_1950_1.txt", text);
        const std::vector<DocumentRef> docs{doc_at(dir.path(), "mag_1950_1.txt")};
        auto opts = with_patterns({";"});
        auto result = run_pipeline(docs, opts);
        auto series = frequency_series(result, opts.patterns[0], 0, false);
        REQUIRE(series.rows.size() == 1);
        CHECK(series.rows[0].word_total == 1000);
        CHECK(series.rows[0].match_count == 5);
        CHECK(series.rows[0].per_million == 5000.0);
    }
    SUBCASE("genre rows sum to the corpus row") {
        generate_corpus(small_spec(4), dir.path());
        auto opts = with_patterns({"in order to"});
        auto result = run_pipeline(scan_corpus(dir.path()).documents, opts);
        for (auto denominator : {Denominator::kept, Denominator::raw}) {
            auto series = frequency_series(result, opts.patterns[0], 0, true, denominator);
            std::map<int, std::pair<std::uint64_t, std::uint64_t>> all, sums;
            for (const auto& row : series.rows) {
                auto& target = row.genre ? sums[row.decade] : all[row.decade];
                target.first += row.match_count;
                target.second += row.word_total;
            }
            CHECK(all.size() == 2);
            CHECK(all == sums);
        }
    }
    SUBCASE("raw denominator includes filtered sentences") {
        write_file(dir / "fic_1901_1.txt", "Go. In order to win we ran.");
        const std::vector<DocumentRef> docs{doc_at(dir.path(), "fic_1901_1.txt")};
        auto opts = with_patterns({"in order to"});
        auto result = run_pipeline(docs, opts);
        auto kept = frequency_series(result, opts.patterns[0], 0, false, Denominator::kept);
        auto raw = frequency_series(result, opts.patterns[0], 0, false, Denominator::raw);
        CHECK(kept.rows[0].word_total == 6);
        CHECK(raw.rows[0].word_total == 7);
        CHECK(kept.rows[0].match_count == 1);
    }
    SUBCASE("empty result") {
        CHECK_THROWS_AS(frequency_series(CorpusResult{}, TokenPattern::parse("x"), 0, false), EmptyCorpus);
    }
}

TEST_CASE("denominator names") {
    CHECK(parse_denominator("kept") == Denominator::kept);
    CHECK(parse_denominator("raw") == Denominator::raw);
    CHECK_THROWS_AS(parse_denominator("all"), ConfigError);
}
