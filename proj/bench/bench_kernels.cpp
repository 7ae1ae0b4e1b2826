// Serial reference kernels against their OpenMP counterparts on
// realization matrices and dense random matrices.

#include "msp/kernels.hpp"
#include "msp/matrix.hpp"
#include "msp/realize.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace msp;

namespace {

IntMatrix dense_matrix(std::size_t dim)
{
    std::mt19937_64 rng(dim);
    std::uniform_int_distribution<int> dist(-3, 3);
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = dist(rng);
    return m;
}

// Preserving realization of {2, 3, ..., k}; dimension grows quadratically in k.
IntMatrix realization_matrix(Period k)
{
    std::set<Period> target;
    for (Period n = 2; n <= k; ++n) target.insert(n);
    return realize_orientable_preserving(TargetSet(target)).model.matrix();
}

void BM_MatMulSerial(benchmark::State& state)
{
    const IntMatrix a = dense_matrix(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::mat_mul_serial(a, a));
}

void BM_MatMulParallel(benchmark::State& state)
{
    const IntMatrix a = dense_matrix(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::mat_mul_parallel(a, a));
    state.counters["threads"] = kernels::max_threads();
}

void BM_TracePowersSerial(benchmark::State& state)
{
    const IntMatrix a = realization_matrix(state.range(0));
    state.counters["dim"] = static_cast<double>(a.dim());
    for (auto _ : state) benchmark::DoNotOptimize(kernels::trace_powers_serial(a, 24));
}

void BM_TracePowersParallel(benchmark::State& state)
{
    const IntMatrix a = realization_matrix(state.range(0));
    state.counters["dim"] = static_cast<double>(a.dim());
    for (auto _ : state) benchmark::DoNotOptimize(kernels::trace_powers_parallel(a, 24));
}

void BM_Charpoly(benchmark::State& state)
{
    const IntMatrix a = realization_matrix(state.range(0));
    state.counters["dim"] = static_cast<double>(a.dim());
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(a));
}

}  // namespace

BENCHMARK(BM_MatMulSerial)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatMulParallel)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TracePowersSerial)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TracePowersParallel)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Charpoly)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
