#include <benchmark/benchmark.h>

#include "fpcurves/equidist.hpp"
#include "fpcurves/kloosterman.hpp"

static void BM_KloostermanSum(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    const fpc::PrimeField field(p);
    const fpc::KloostermanEvaluator ev(field);
    fpc::Residue d = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.sum(1, d));
        d = d + 1 == p ? 1 : d + 1;
    }
    state.SetItemsProcessed(state.iterations() * (p - 1));
}
BENCHMARK(BM_KloostermanSum)->Arg(1009)->Arg(10007)->Arg(99991);

static void BM_VerticalFamily(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fpc::vertical_family(10007).size());
}
BENCHMARK(BM_VerticalFamily)->Unit(benchmark::kMillisecond);

static void BM_KsStatistic(benchmark::State& state) {
    std::vector<double> angles;
    for (const auto& s : fpc::vertical_family(10007)) angles.push_back(s.theta);
    for (auto _ : state) benchmark::DoNotOptimize(fpc::ks_statistic(angles));
}
BENCHMARK(BM_KsStatistic);

BENCHMARK_MAIN();
