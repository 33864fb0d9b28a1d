#include "qfp/kinetics/diagnostics.hpp"
#include "qfp/kinetics/initial.hpp"
#include "qfp/kinetics/reference.hpp"
#include "qfp/kinetics/solver.hpp"

#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qfp::kinetics;

namespace {

constexpr double kK = -0.5;

DistributionField initial(std::size_t nodes)
{
    return modulated_maxwellian({nodes, 1.0, nodes, 8.0}, kK, 1.0, 0.3);
}

double stable_dt(const DistributionField& f)
{
    return max_stable_dt(f.grid(), f.k(), f.max_value());
}

void set_threads(benchmark::State& state, int index)
{
#ifdef _OPENMP
    omp_set_num_threads(static_cast<int>(state.range(index)));
#else
    (void)state;
    (void)index;
#endif
}

void BM_step_parallel(benchmark::State& state)
{
    set_threads(state, 1);
    auto f = initial(static_cast<std::size_t>(state.range(0)));
    Solver solver(f.grid(), kK, BoundaryCondition::bounce_back());
    const double dt = stable_dt(f);
    for (auto _ : state) {
        solver.advance(f, dt);
        benchmark::DoNotOptimize(f.values().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(f.values().size()));
}

void BM_step_reference(benchmark::State& state)
{
    auto f = initial(static_cast<std::size_t>(state.range(0)));
    const auto bc = BoundaryCondition::bounce_back();
    const double dt = stable_dt(f);
    for (auto _ : state) {
        f = reference::step(f, dt, bc, nullptr);
        benchmark::DoNotOptimize(f.values().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(f.values().size()));
}

void BM_entropy_parallel(benchmark::State& state)
{
    set_threads(state, 1);
    const auto f = initial(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(entropy(f));
}

void BM_entropy_reference(benchmark::State& state)
{
    const auto f = initial(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::entropy(f));
}

void BM_energy_parallel(benchmark::State& state)
{
    set_threads(state, 1);
    const auto f = initial(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(total_energy(f));
}

void BM_energy_reference(benchmark::State& state)
{
    const auto f = initial(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::total_energy(f));
}

void thread_sizes(benchmark::internal::Benchmark* b)
{
    for (long n : {64, 128, 256})
        for (long threads : {1, 2, 4})
            b->Args({n, threads});
}

} // namespace

BENCHMARK(BM_step_parallel)->Apply(thread_sizes)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_step_reference)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_entropy_parallel)->Apply(thread_sizes)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_entropy_reference)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_energy_parallel)->Apply(thread_sizes)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_energy_reference)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
