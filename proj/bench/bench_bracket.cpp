// Serial vs OpenMP state-sum kernels on a mid-size torus closure.

#include <benchmark/benchmark.h>

#include "vknot/invariants.hpp"
#include "vknot/representation.hpp"

namespace {

vknot::Diagram torus_diagram(int p, int n) {
    return vknot::close_tangle(vknot::torus_tangle(p, n, 1));
}

void BM_bracket_serial(benchmark::State& state) {
    vknot::Diagram d = torus_diagram(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto poly = vknot::bracket_serial(d);
        benchmark::DoNotOptimize(poly);
    }
    state.SetLabel(std::to_string(d.classical_count()) + " crossings");
}

void BM_bracket_parallel(benchmark::State& state) {
    vknot::Diagram d = torus_diagram(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto poly = vknot::bracket_parallel(d);
        benchmark::DoNotOptimize(poly);
    }
    state.SetLabel(std::to_string(d.classical_count()) + " crossings");
}

} // namespace

BENCHMARK(BM_bracket_serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bracket_parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
