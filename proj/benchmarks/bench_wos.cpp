#include <benchmark/benchmark.h>

#include "disklab/constructions.hpp"
#include "disklab/harmonic_measure.hpp"

using namespace disklab;

namespace {

void BM_SingleHoleWalks(benchmark::State& state) {
    HoleDomain domain = HoleDomain::from_pseudo(
        {PseudoDisk{DiskPoint::xy(0.3, 0.2), std::log(0.15)}});
    DiskPoint z = DiskPoint::xy(-0.2, 0.1);
    WosOptions opt;
    opt.walks = state.range(0);
    opt.seed = 1;
    opt.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wos_estimate(domain, z, opt).mean);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SingleHoleWalks)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ConditionD(benchmark::State& state) {
    ZeroSequence geo = geometric_sequence(8);
    BlaschkeProduct b{geo};
    double c0 = 0.0;
    for (std::size_t n = 0; n < geo.size(); ++n) {
        c0 = std::max(c0, -b.deleted_log_product(n));
    }
    BoundaryMeasure h = BoundaryMeasure::uniform(4.0 * c0, 256);
    WosOptions opt;
    opt.walks = state.range(0);
    opt.seed = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(condition_d_check(geo, h, 0.5, opt).min_outer);
    }
}
BENCHMARK(BM_ConditionD)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
