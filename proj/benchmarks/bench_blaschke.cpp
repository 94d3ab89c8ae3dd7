#include <benchmark/benchmark.h>

#include "disklab/blaschke.hpp"
#include "disklab/constructions.hpp"
#include "disklab/rng.hpp"

using namespace disklab;

namespace {

BlaschkeProduct make_product(int zeros) {
    CounterRng rng(2024, 7);
    std::vector<DiskPoint> pts;
    pts.reserve(zeros);
    for (int i = 0; i < zeros; ++i) {
        double r = 0.9 * std::sqrt(rng.uniform());
        double th = 6.283185307179586 * rng.uniform();
        pts.push_back(DiskPoint::from(std::polar(r, th)));
    }
    return BlaschkeProduct{ZeroSequence::from_points(std::move(pts))};
}

void BM_LogModulus(benchmark::State& state) {
    BlaschkeProduct b = make_product(static_cast<int>(state.range(0)));
    DiskPoint z = DiskPoint::xy(0.31, -0.22);
    for (auto _ : state) {
        benchmark::DoNotOptimize(b.log_modulus(z));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogModulus)->Arg(10)->Arg(50)->Arg(200);

void BM_DirectEval(benchmark::State& state) {
    BlaschkeProduct b = make_product(static_cast<int>(state.range(0)));
    DiskPoint z = DiskPoint::xy(0.31, -0.22);
    for (auto _ : state) {
        benchmark::DoNotOptimize(b.eval(z));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DirectEval)->Arg(10)->Arg(50)->Arg(200);

void BM_Derivative(benchmark::State& state) {
    BlaschkeProduct b = make_product(static_cast<int>(state.range(0)));
    DiskPoint z = DiskPoint::xy(0.31, -0.22);
    for (auto _ : state) {
        benchmark::DoNotOptimize(b.derivative(z));
    }
}
BENCHMARK(BM_Derivative)->Arg(10)->Arg(50);

void BM_DeletedProducts(benchmark::State& state) {
    BlaschkeProduct b{geometric_sequence(static_cast<int>(state.range(0)))};
    for (auto _ : state) {
        double worst = 0.0;
        for (std::size_t n = 0; n < b.size(); ++n) {
            worst = std::min(worst, b.deleted_log_product(n));
        }
        benchmark::DoNotOptimize(worst);
    }
}
BENCHMARK(BM_DeletedProducts)->Arg(15)->Arg(30);

}  // namespace
