#include "rimfloer/braid/braid.hpp"
#include "rimfloer/grid/hfk.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace rimfloer;

namespace {

// Closure grids of a few knots, sizes 5 through 8.
grid::GridDiagram fixture(int which) {
    switch (which) {
    case 0: return grid::GridDiagram({2, 3, 4, 0, 1}, {0, 1, 2, 3, 4});
    case 1: return grid::parse_grid("X: 4 2 3 6 1 5\nO: 6 5 1 2 4 3\n");
    case 2: return grid::parse_grid("X: 2 6 5 4 1 7 3\nO: 4 3 7 6 5 2 1\n");
    case 3: return braid::braid_to_grid(braid::parse_braid("4: 1 1 2 -1 -3 2 -3"));
    default: return braid::braid_to_grid(braid::parse_braid("3: 1 2 1 2 1 2 1 2"));
    }
}

grid::HomologyOptions options(int threads) {
    grid::HomologyOptions o;
    o.max_size = grid::kMaxGridSize;
    o.threads = threads;
    return o;
}

void BM_reference(benchmark::State &state) {
    const grid::GridDiagram g = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(grid::homology_reference(g, options(1)));
    state.SetLabel("n=" + std::to_string(g.size()));
}

void BM_parallel(benchmark::State &state) {
    const grid::GridDiagram g = fixture(static_cast<int>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(grid::homology(g, options(threads)));
    state.SetLabel("n=" + std::to_string(g.size()) + " threads=" + std::to_string(threads));
}

void thread_counts(benchmark::internal::Benchmark *b) {
    const int max_threads = omp_get_max_threads();
    for (int which = 0; which < 5; ++which)
        for (int t = 1; t <= max_threads; t *= 2) b->Args({which, t});
}

}  // namespace

BENCHMARK(BM_reference)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_parallel)->Apply(thread_counts)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
