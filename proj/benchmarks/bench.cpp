#include <benchmark/benchmark.h>

#include "symplex/report.hpp"

using namespace symplex;

namespace {

ModelFile bench_model(const std::string& name) {
    return load_model(std::string(SYMPLEX_CORPUS_DIR_FOR_TESTS) + "/" + name + ".model");
}

void bm_build_complex_6d(benchmark::State& state) {
    ModelFile m = bench_model("g6_n2");
    Sample s;
    for (auto _ : state) {
        InstantiatedModel im = instantiate_model(m, s);
        benchmark::DoNotOptimize(im.complex.dims);
    }
}
BENCHMARK(bm_build_complex_6d);

void bm_full_report_6d(benchmark::State& state) {
    ModelFile m = bench_model("g6_n2");
    for (auto _ : state) {
        ResultReport r = compute_report(m, {});
        benchmark::DoNotOptimize(r.base.BC);
    }
}
BENCHMARK(bm_full_report_6d);

void bm_sawai_twisted(benchmark::State& state) {
    ModelFile m = bench_model("sawai");
    ReportOptions opt;
    opt.twist_labels.push_back("alpha1");
    for (auto _ : state) {
        ResultReport r = compute_report(m, opt);
        benchmark::DoNotOptimize(r.twists);
    }
}
BENCHMARK(bm_sawai_twisted);

void bm_rref_20x20(benchmark::State& state) {
    Matrix m(20, 20);
    unsigned seed = 1;
    for (auto& s : m.a) {
        seed = seed * 1664525u + 1013904223u;
        s = Scalar(rational(static_cast<long>(seed % 19) - 9, 1 + seed % 7));
    }
    for (auto _ : state) {
        Matrix r = rref(m);
        benchmark::DoNotOptimize(r.a);
    }
}
BENCHMARK(bm_rref_20x20);

}  // namespace

BENCHMARK_MAIN();
