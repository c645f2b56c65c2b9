#include <benchmark/benchmark.h>

#include "motivic/oracle.hpp"
#include "motivic/plethystic.hpp"
#include "motivic/quiver.hpp"
#include "motivic/quot.hpp"

using namespace motivic;

namespace {

MotiveSeries dense_series(int order)
{
    MotiveSeries f(1, order);
    for (int n = 1; n <= order; ++n) {
        f.add_term({n}, LaurentPoly::monomial(Integer(n % 3 + 1), n % 5 - 2) + LaurentPoly(1L));
    }
    return f;
}

void BM_ExpAdams(benchmark::State& state)
{
    const auto f = dense_series(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_pleth(f));
    }
}
BENCHMARK(BM_ExpAdams)->Arg(8)->Arg(16)->Arg(24);

void BM_ExpProduct(benchmark::State& state)
{
    const auto f = dense_series(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_pleth_product(f));
    }
}
BENCHMARK(BM_ExpProduct)->Arg(8)->Arg(16)->Arg(24);

void BM_QuotSeriesSurface(benchmark::State& state)
{
    const LaurentPoly p2 = projective_class(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quot_series(p2, 2, 2, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_QuotSeriesSurface)->Arg(6)->Arg(10);

void BM_JordanPartitionSum(benchmark::State& state)
{
    const auto jordan = Quiver::jordan();
    for (auto _ : state) {
        benchmark::DoNotOptimize(nakajima_motive_series(jordan, DimVector{2}, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_JordanPartitionSum)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TwoVertexPartitionSum(benchmark::State& state)
{
    const Quiver quiver(2, {{0, 1}, {1, 0}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(nakajima_motive_series(quiver, DimVector{1, 1}, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_TwoVertexPartitionSum)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OraclePunctual(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_punctual(n, 1, 2, d));
    }
}
BENCHMARK(BM_OraclePunctual)->Args({4, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_OracleGlobal(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_global_affine(3, 2, 3, 1));
    }
}
BENCHMARK(BM_OracleGlobal)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
