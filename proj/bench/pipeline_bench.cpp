// Serial reference vs OpenMP kernel over a generated corpus.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <memory>
#include <random>

#include "diachron/generator.hpp"
#include "diachron/pipeline.hpp"

namespace fs = std::filesystem;
using namespace diachron;

namespace {

struct Corpus {
    fs::path root;
    std::vector<DocumentRef> docs;
    std::uint64_t words = 0;

    Corpus() {
        std::random_device rd;
        root = fs::temp_directory_path() / ("diachron_bench_" + std::to_string(rd()));
        GeneratorSpec spec;
        spec.seed = 7;
        spec.sentences_per_doc = 300;
        spec.semicolon_rate = 0.1;
        spec.pattern_rate = 0.05;
        words = generate_corpus(spec, root).total_words();
        docs = scan_corpus(root).documents;
    }
    ~Corpus() {
        std::error_code ec;
        fs::remove_all(root, ec);
    }
};

const Corpus& corpus() {
    static const auto c = std::make_unique<Corpus>();
    return *c;
}

PipelineOptions options() {
    PipelineOptions o;
    o.patterns = {TokenPattern::parse("in order to"), TokenPattern::parse(";")};
    return o;
}

void BM_serial(benchmark::State& state) {
    const auto& c = corpus();
    const auto opts = options();
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline_serial(c.docs, opts));
    state.counters["words/s"] =
        benchmark::Counter(static_cast<double>(c.words) * static_cast<double>(state.iterations()),
                           benchmark::Counter::kIsRate);
}

void BM_parallel(benchmark::State& state) {
    const auto& c = corpus();
    const auto opts = options();
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(c.docs, opts, jobs));
    state.counters["words/s"] =
        benchmark::Counter(static_cast<double>(c.words) * static_cast<double>(state.iterations()),
                           benchmark::Counter::kIsRate);
}

}  // namespace

BENCHMARK(BM_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
