#include <benchmark/benchmark.h>

#include "bgkjump/direct.hpp"
#include "bgkjump/quadrature.hpp"
#include "bgkjump/series.hpp"
#include "bgkjump/workspace.hpp"

namespace {

const bgkjump::Workspace& shared_workspace() {
    static const bgkjump::Workspace ws;
    ws.j3_tableau(); // include tableau construction in setup, not in timings
    return ws;
}

void BM_GaussianRuleBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bgkjump::build_gaussian_halfline_rule(n));
    }
}
BENCHMARK(BM_GaussianRuleBuild)->Arg(32)->Arg(64)->Arg(128);

void BM_TableauBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        bgkjump::Workspace ws(bgkjump::GridParams{64, n, 1.0});
        benchmark::DoNotOptimize(ws.j3_tableau().size());
    }
}
BENCHMARK(BM_TableauBuild)->Arg(100)->Arg(200);

void BM_ZeroOrderDensity(benchmark::State& state) {
    const bgkjump::SeriesSolver solver(shared_workspace());
    for (auto _ : state) {
        benchmark::DoNotOptimize(solver.zero_order_density().size());
    }
}
BENCHMARK(BM_ZeroOrderDensity);

void BM_SeriesAssembly(benchmark::State& state) {
    const bgkjump::SeriesSolver solver(shared_workspace());
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solver.assemble_series(1.0, 1.0, order).eps_T);
    }
}
BENCHMARK(BM_SeriesAssembly)->Arg(1)->Arg(3);

void BM_DirectSolve(benchmark::State& state) {
    const bgkjump::DirectSolver solver(shared_workspace());
    for (auto _ : state) {
        benchmark::DoNotOptimize(solver.solve_fixed_point(1.0, 1.0, 1e-8, 200).iterations);
    }
}
BENCHMARK(BM_DirectSolve);

} // namespace

BENCHMARK_MAIN();
