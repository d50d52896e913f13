#include <benchmark/benchmark.h>

#include <wktau/amatrix.hpp>
#include <wktau/fock.hpp>
#include <wktau/tau.hpp>
#include <wktau/virasoro.hpp>

using namespace wktau;

static void BM_ABlock(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a_block(n, n));
    }
}
BENCHMARK(BM_ABlock)->Arg(5)->Arg(10)->Arg(20);

static void BM_ZSchur(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_schur(d));
    }
}
BENCHMARK(BM_ZSchur)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ZP(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_p(d));
    }
}
BENCHMARK(BM_ZP)->Arg(9)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_CutJoin(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_cutjoin(d));
    }
}
BENCHMARK(BM_CutJoin)->Arg(9)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_FockExp(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const CoeffMatrix table = a_block(d - 1, d - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fock_exp(table, d));
    }
}
BENCHMARK(BM_FockExp)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_VirasoroCheck(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const FormalSeries z = z_series(Family::T, d);
    for (auto _ : state) {
        for (int n = -1; n <= 2; ++n) {
            benchmark::DoNotOptimize(virasoro_check(n, z, d - 2 * n - 3));
        }
    }
}
BENCHMARK(BM_VirasoroCheck)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
