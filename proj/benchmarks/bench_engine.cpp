#include <benchmark/benchmark.h>

#include "shuffle/engine.hpp"
#include "shuffle/symfunc.hpp"

using namespace shuffle;

namespace {

void BM_EnumerateParkingFunctions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::int64_t count = 0;
    for (auto _ : state) {
        ParkingFunctionStream stream(n);
        count = 0;
        while (auto pf = stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_EnumerateParkingFunctions)->Arg(4)->Arg(5)->Arg(6);

void BM_LabelingWalk(benchmark::State& state) {
    // isolates the odometer from ParkingFunction materialization
    const int n = static_cast<int>(state.range(0));
    const auto paths = enumerate_dyck_paths(n);
    std::int64_t count = 0;
    for (auto _ : state) {
        count = 0;
        for (const DyckPath& path : paths)
            for_each_labeling(path, [&](const std::vector<int>&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_LabelingWalk)->Arg(6)->Arg(7);

void BM_StatisticsOfOrder8Example(benchmark::State& state) {
    const ParkingFunction pf =
        parse_parking_function("path=NNNEEENNENEENNEE;cars=2,3,8,4,6,7,1,5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(dinv(pf));
        benchmark::DoNotOptimize(word(pf));
        benchmark::DoNotOptimize(ides(pf));
        benchmark::DoNotOptimize(touch(pf));
    }
}
BENCHMARK(BM_StatisticsOfOrder8Example);

void BM_ShuffleSum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const FExpansion f = shuffle_sum(n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_ShuffleSum)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ShuffleSumThreaded(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const FExpansion f = shuffle_sum(7, {threads, false});
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_ShuffleSumThreaded)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FundamentalToSchur(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FExpansion f = shuffle_sum(n);
    for (auto _ : state) {
        const SchurExpansion schur = fundamental_to_schur(f);
        benchmark::DoNotOptimize(schur);
    }
}
BENCHMARK(BM_FundamentalToSchur)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
