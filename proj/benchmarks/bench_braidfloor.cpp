#include <benchmark/benchmark.h>

#include "braidfloor/bounds.hpp"
#include "braidfloor/burau.hpp"
#include "braidfloor/order.hpp"
#include "braidfloor/sampling.hpp"

using namespace braidfloor;

namespace {

void BM_HandleReduce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int len = static_cast<int>(state.range(1));
    const BraidWord w = random_braid(n, len, 12345);
    for (auto _ : state) benchmark::DoNotOptimize(handle_reduce(w));
}
BENCHMARK(BM_HandleReduce)->Args({4, 40})->Args({6, 60})->Args({8, 100});

void BM_Compare_Len100_B8(benchmark::State& state) {
    const BraidWord a = random_braid(8, 100, 777);
    const BraidWord b = random_braid(8, 100, 778);
    for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}
BENCHMARK(BM_Compare_Len100_B8);

void BM_Floor_Len60_B6(benchmark::State& state) {
    const BraidWord w = random_braid(6, 60, 4242);
    for (auto _ : state) benchmark::DoNotOptimize(dehornoy_floor(w).floor);
}
BENCHMARK(BM_Floor_Len60_B6);

void BM_Floor_DeltaPower(benchmark::State& state) {
    const BraidWord w = delta_power(5, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dehornoy_floor(w).floor);
}
BENCHMARK(BM_Floor_DeltaPower)->Arg(4)->Arg(8);

void BM_BurauMatrix_B6(benchmark::State& state) {
    const BraidWord w = random_braid(6, 30, 99);
    for (auto _ : state) benchmark::DoNotOptimize(burau_matrix(w));
}
BENCHMARK(BM_BurauMatrix_B6);

void BM_Alexander_B5(benchmark::State& state) {
    const BraidWord w = random_knot_braid(5, 30, 31337);
    for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(w));
}
BENCHMARK(BM_Alexander_B5);

void BM_VerifyBraid_B6(benchmark::State& state) {
    const BraidWord w = random_braid(6, 30, 2718);
    for (auto _ : state) benchmark::DoNotOptimize(verify_braid(w).all_hold());
}
BENCHMARK(BM_VerifyBraid_B6);

void BM_BandProductFloor(benchmark::State& state) {
    const BraidWord w = random_band_product(6, 20, 161803);
    for (auto _ : state) benchmark::DoNotOptimize(dehornoy_floor(w).floor);
}
BENCHMARK(BM_BandProductFloor);

}  // namespace

BENCHMARK_MAIN();
