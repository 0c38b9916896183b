#include <benchmark/benchmark.h>

#include "cccodes/ccc.hpp"
#include "cccodes/charsums.hpp"
#include "cccodes/codes.hpp"

using namespace cccodes;

static void BM_FieldMul(benchmark::State& state) {
    const FieldPtr f = make_field(static_cast<Residue>(state.range(0)), static_cast<unsigned>(state.range(1)));
    const FieldElement a = f->element_at(f->q() / 3);
    FieldElement x = f->element_at(f->q() - 1);
    for (auto _ : state) {
        x = x * a;
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldMul)->Args({3, 5})->Args({7, 5})->Args({3, 10});

static void BM_Trace(benchmark::State& state) {
    const FieldPtr f = make_field(7, 5);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace(f->element_at(i)));
        i = (i + 7919) % f->q();
    }
}
BENCHMARK(BM_Trace);

static void BM_TraceLinear(benchmark::State& state) {
    const FieldPtr f = make_field(7, 5);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_linear(f->element_at(i)));
        i = (i + 7919) % f->q();
    }
}
BENCHMARK(BM_TraceLinear);

static void BM_BuildTraceCode(benchmark::State& state) {
    const FieldPtr f = make_field(static_cast<Residue>(state.range(0)), static_cast<unsigned>(state.range(1)));
    for (auto _ : state) {
        TraceCode code = build_trace_code(build_defining_set_D(f, 1));
        benchmark::DoNotOptimize(code.distinct_count());
    }
}
BENCHMARK(BM_BuildTraceCode)->Args({3, 5})->Args({5, 4})->Args({7, 4})->Unit(benchmark::kMillisecond);

static void BM_WeightCensus(benchmark::State& state) {
    const TraceCode code = build_trace_code(build_defining_set_D(make_field(7, 4), 2));
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code));
}
BENCHMARK(BM_WeightCensus)->Unit(benchmark::kMillisecond);

static void BM_PairwiseDistance(benchmark::State& state) {
    const TraceCode code = build_trace_code(build_defining_set_E(make_field(static_cast<Residue>(state.range(0)), 4)));
    const CccCode s = extract_subcode_second(code, Construction::SecondS, {0});
    for (auto _ : state) benchmark::DoNotOptimize(pairwise_min_distance(s.words));
    state.counters["pairs"] = static_cast<double>(s.M) * static_cast<double>(s.M - 1) / 2;
}
BENCHMARK(BM_PairwiseDistance)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_GaussSum(benchmark::State& state) {
    const FieldPtr f = make_field(static_cast<Residue>(state.range(0)), static_cast<unsigned>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_sum_fq_unchecked(*f));
}
BENCHMARK(BM_GaussSum)->Args({3, 5})->Args({7, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
