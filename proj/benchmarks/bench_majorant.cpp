#include <benchmark/benchmark.h>

#include "disklab/constructions.hpp"
#include "disklab/majorant.hpp"

using namespace disklab;

namespace {

void BM_InterpolationFit(benchmark::State& state) {
    ZeroSequence seq = geometric_sequence(static_cast<int>(state.range(0)));
    FitOptions opt;
    opt.node_count = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_interpolation(seq, opt).objective);
    }
}
BENCHMARK(BM_InterpolationFit)->Args({8, 256})->Args({12, 256})->Args({12, 512});

void BM_SingleConstraintFit(benchmark::State& state) {
    FitOptions opt;
    opt.node_count = static_cast<int>(state.range(0));
    std::vector<std::pair<DiskPoint, double>> cons{{DiskPoint::xy(0.6, 0.0), 2.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_min_majorant(cons, opt).objective);
    }
}
BENCHMARK(BM_SingleConstraintFit)->Arg(1 << 10)->Arg(1 << 12);

void BM_MajorantEval(benchmark::State& state) {
    BoundaryMeasure mu = BoundaryMeasure::uniform(1.0, static_cast<int>(state.range(0)));
    DiskPoint z = DiskPoint::xy(0.4, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_majorant(mu, z));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MajorantEval)->Arg(256)->Arg(1024);

}  // namespace
