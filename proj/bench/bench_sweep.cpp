// Serial reference vs OpenMP sweeps over a grid of second points.

#include <benchmark/benchmark.h>

#include "hyperball/quad.hpp"
#include "hyperball/sweep.hpp"

using namespace hyperball;

namespace {

std::vector<BallPoint> ring_grid(int count) {
    std::vector<BallPoint> ws;
    for (int k = 0; k < count; ++k) ws.push_back(BallPoint::scalar(std::polar(0.85 * (k + 0.5) / count, 0.7 * k)));
    return ws;
}

const Parameters kParams = make_parameters(1, 2.5);

PointKernel heat_at_origin() {
    return [](const BallPoint& w) { return heat_kernel(kParams, 0.5, BallPoint::origin(1), w); };
}

void BM_HeatSweepReference(benchmark::State& state) {
    const auto ws = ring_grid(static_cast<int>(state.range(0)));
    const PointKernel k = heat_at_origin();
    for (auto _ : state) benchmark::DoNotOptimize(sweep_kernel_reference(k, ws));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HeatSweepParallel(benchmark::State& state) {
    const auto ws = ring_grid(static_cast<int>(state.range(0)));
    const PointKernel k = heat_at_origin();
    for (auto _ : state) benchmark::DoNotOptimize(sweep_kernel(k, ws, Execution::parallel));
    state.SetItemsProcessed(state.iterations() * state.range(0));
    state.counters["threads"] = sweep_threads();
}

void BM_BallIntegral(benchmark::State& state) {
    const Execution mode = state.range(0) ? Execution::parallel : Execution::serial;
    const BallField f = [](const CVec& z) { return heat_kernel(kParams, 0.5, BallPoint::origin(1), BallPoint(z)).value; };
    BallGrid grid;
    grid.radial = 16;
    grid.angular = 16;
    for (auto _ : state) benchmark::DoNotOptimize(integrate_ball(kParams, f, grid, mode));
}

}  // namespace

BENCHMARK(BM_HeatSweepReference)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeatSweepParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallIntegral)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
