#include "pertcoul/exact.hpp"
#include "pertcoul/numerics.hpp"
#include "pertcoul/qes_oracle.hpp"

#include <benchmark/benchmark.h>

using namespace pertcoul;

namespace {

const PhysicalParams unit;
const PotentialParams p1{1.0, 1.0, 0.5};

void BM_EigenLowest(benchmark::State& state) {
    const auto dim = dimension_reduce(3, 0);
    const auto v = effective_potential(p1, dim, unit);
    const auto count = static_cast<std::size_t>(state.range(0));
    const RadialGrid grid(12.0 / static_cast<double>(count + 1), count);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigen_lowest(v, grid, unit, {3, false, false}).values);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigenLowest)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_EigenVectors(benchmark::State& state) {
    const auto dim = dimension_reduce(3, 0);
    const auto v = effective_potential(p1, dim, unit);
    const auto grid = build_grid(p1, dim, unit);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigen_lowest(v, grid, unit, {3, true, false}).vectors);
    }
}
BENCHMARK(BM_EigenVectors);

void BM_QesSolve(benchmark::State& state) {
    const auto dim = dimension_reduce(3, 0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qes_solve(1.0, 0.5, dim, unit, n));
}
BENCHMARK(BM_QesSolve)->DenseRange(0, oracle_max_level, 2);

void BM_HResidual(benchmark::State& state) {
    const auto dim = dimension_reduce(3, 0);
    const auto gs = ground_state(p1, dim, unit);
    const auto v = effective_potential(p1, dim, unit);
    const auto grid = build_grid(p1, dim, unit);
    for (auto _ : state) benchmark::DoNotOptimize(h_residual(gs.psi, grid, 1.0, v, unit));
}
BENCHMARK(BM_HResidual);

} // namespace

// The distro libbenchmark_main.a carries LTO bytecode from another compiler release.
BENCHMARK_MAIN();
