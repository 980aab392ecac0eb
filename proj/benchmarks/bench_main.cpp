#include <benchmark/benchmark.h>

#include "gsqg/solver/protean.hpp"
#include "gsqg/solver/run.hpp"
#include "gsqg/spectral/fft.hpp"
#include "gsqg/spectral/littlewood_paley.hpp"
#include "gsqg/spectral/random_field.hpp"

using namespace gsqg;

namespace {

spectral::SpectralField field(int n, std::uint64_t seed) {
    spectral::GridSpec g;
    g.n = n;
    spectral::RandomFieldSpec s;
    s.seed = seed;
    return spectral::random_field(g, s);
}

void BM_FftRoundTrip(benchmark::State& state) {
    const auto f = field(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        auto p = spectral::transform_backward(f);
        benchmark::DoNotOptimize(spectral::transform_forward(p));
    }
}
BENCHMARK(BM_FftRoundTrip)->Arg(64)->Arg(128)->Arg(256);

void BM_FluxDivergence(benchmark::State& state) {
    const auto theta = field(static_cast<int>(state.range(0)), 2);
    const solver::ProteanOperator op(theta.grid(), multipliers::MultiplierSuite{});
    const auto q = theta * -1.0;
    for (auto _ : state) benchmark::DoNotOptimize(op.flux_divergence(q, theta));
}
BENCHMARK(BM_FluxDivergence)->Arg(64)->Arg(128);

void BM_Step(benchmark::State& state) {
    const auto theta = field(static_cast<int>(state.range(0)), 3);
    solver::RunConfig rc;
    rc.grid = theta.grid();
    for (auto _ : state) benchmark::DoNotOptimize(solver::step(theta, 0.0, 1e-3, rc));
}
BENCHMARK(BM_Step)->Arg(64)->Arg(128);

void BM_LittlewoodPaley(benchmark::State& state) {
    const auto f = field(static_cast<int>(state.range(0)), 4);
    const int j_max = spectral::default_j_max(f.grid());
    for (auto _ : state) benchmark::DoNotOptimize(spectral::lp_partition(f, 0, j_max));
}
BENCHMARK(BM_LittlewoodPaley)->Arg(64)->Arg(128);

}  // namespace
BENCHMARK_MAIN();
