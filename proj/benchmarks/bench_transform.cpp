#include <benchmark/benchmark.h>

#include "littlewood/fft.hpp"
#include "littlewood/generators.hpp"
#include "littlewood/spectral.hpp"

using namespace littlewood;

static void BM_fft(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::vector<spectral::cplx> data(m, {1.0, 0.5});
    for (auto _ : state) {
        spectral::fft_inplace(data, false);
        benchmark::DoNotOptimize(data.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(m));
}
BENCHMARK(BM_fft)->RangeMultiplier(4)->Range(1 << 12, 1 << 22);

static void BM_l1_norm_interval(benchmark::State& state) {
    setcore::GenParams p;
    p.length = static_cast<std::size_t>(state.range(0));
    const auto A = setcore::generate(setcore::GenKind::interval, p, 0);
    const auto f = spectral::SupportedFunction::indicator(A);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::l1_norm(f, 1e-4).l1);
    }
}
BENCHMARK(BM_l1_norm_interval)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)
    ->Unit(benchmark::kMillisecond);

static void BM_l4_energy_check(benchmark::State& state) {
    setcore::GenParams p;
    p.length = 256;
    p.density = 256.0 / static_cast<double>(state.range(0));
    const auto A = setcore::generate(setcore::GenKind::random_subset, p, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::l4_energy_check(A).first);
    }
}
BENCHMARK(BM_l4_energy_check)->RangeMultiplier(16)->Range(1 << 12, 1 << 20)
    ->Unit(benchmark::kMillisecond);
