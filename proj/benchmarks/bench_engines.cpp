#include <benchmark/benchmark.h>

#include "grover/analytic.hpp"
#include "grover/distributions.hpp"

namespace {

grover::AmplitudeState random_state(std::uint64_t n, std::uint64_t r) {
    return grover::generate({.kind = grover::DistributionKind::random_complex,
                             .config = grover::SearchConfig::first_marked(n, r),
                             .seed = 1});
}

void BM_GroverStep(benchmark::State& st) {
    auto state = random_state(static_cast<std::uint64_t>(st.range(0)), 1);
    for (auto _ : st) {
        state = grover::grover_step(std::move(state));
        benchmark::DoNotOptimize(state[0]);
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_GroverStep)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

void BM_Solve(benchmark::State& st) {
    const auto state = random_state(static_cast<std::uint64_t>(st.range(0)), 3);
    for (auto _ : st) {
        benchmark::DoNotOptimize(grover::solve(state));
    }
}
BENCHMARK(BM_Solve)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

void BM_Reconstruct(benchmark::State& st) {
    const auto sol = grover::solve(random_state(static_cast<std::uint64_t>(st.range(0)), 3));
    std::uint64_t t = 0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(grover::reconstruct(sol, ++t));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_Reconstruct)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

// Scalar-only planning; the scan length grows like sqrt(N).
void BM_NumericScan(benchmark::State& st) {
    const auto n = static_cast<std::uint64_t>(1) << st.range(0);
    const double u = 1.0 / std::sqrt(static_cast<double>(n));
    const auto sol = grover::solve(grover::SummaryStats{u, u, 0.0, 0.0}, grover::SearchConfig::first_marked(n, 1));
    for (auto _ : st) {
        benchmark::DoNotOptimize(grover::optimal_time_numeric(sol));
    }
}
BENCHMARK(BM_NumericScan)->DenseRange(10, 30, 10);

void BM_ClosedFormPlan(benchmark::State& st) {
    const auto sol = grover::solve(random_state(1 << 12, 1));
    for (auto _ : st) {
        benchmark::DoNotOptimize(grover::best_plan(sol));
    }
}
BENCHMARK(BM_ClosedFormPlan);

} // namespace

// The packaged benchmark_main archive carries LTO bytecode from another compiler release.
BENCHMARK_MAIN();
