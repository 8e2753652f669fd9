#include <evidence/bias.hpp>
#include <evidence/numeric.hpp>
#include <evidence/relative_belief.hpp>

#include <benchmark/benchmark.h>

using namespace evidence;

namespace {

BayesInferenceBase example_base() {
    return BayesInferenceBase(LocationNormalData(2, 1.47, 1.0), NormalParams(0.0, 2.0), 0.01);
}

void BM_normal_cdf(benchmark::State& state) {
    double z = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_cdf(z));
        z = z > 6.0 ? -6.0 : z + 0.001;
    }
}
BENCHMARK(BM_normal_cdf);

void BM_build_grid(benchmark::State& state) {
    const auto base = example_base();
    const GridOptions options{state.range(0) ? Target::abs_value : Target::identity, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(build_grid(base, options));
}
BENCHMARK(BM_build_grid)->Arg(0)->Arg(1);

void BM_evidence_report(benchmark::State& state) {
    const EvidenceGrid grid = build_grid(example_base());
    for (auto _ : state) benchmark::DoNotOptimize(evidence_report(grid, 2.0, 0.5));
}
BENCHMARK(BM_evidence_report);

void BM_bias_against_H(benchmark::State& state) {
    BiasSettings s;
    s.reps = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bias_against_H(example_base(), 2.0, s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_bias_against_H)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
