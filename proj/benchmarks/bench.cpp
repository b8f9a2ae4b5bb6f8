#include <benchmark/benchmark.h>

#include <random>

#include "cpfact/cp2.hpp"
#include "cpfact/oracle.hpp"
#include "cpfact/squares.hpp"

using namespace cpfact;

namespace {

void BM_min_square_count(benchmark::State& state) {
    int64 x = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(min_square_count(x));
}
BENCHMARK(BM_min_square_count)->Arg(7)->Arg(99991)->Arg(999'999'937);

void BM_decompose(benchmark::State& state) {
    int64 x = state.range(0);
    for (auto _ : state) {
        auto d = decompose(x);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_decompose)->Arg(7)->Arg(9999999)->Arg(999'999'999);

void BM_factor_random(benchmark::State& state) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int64> dist(0, state.range(0));
    for (auto _ : state) {
        int64 a = dist(rng), c = dist(rng);
        std::uniform_int_distribution<int64> db(0, isqrt(a * c));
        auto f = factor(Mat2{a, db(rng), c});
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_factor_random)->Arg(100)->Arg(10'000)->Arg(1'000'000);

void BM_exact_rank(benchmark::State& state) {
    Mat2 m{state.range(0), 1, state.range(0)};
    for (auto _ : state) {
        auto r = exact_cp_rank(m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_exact_rank)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
