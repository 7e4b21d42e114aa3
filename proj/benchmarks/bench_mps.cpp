#include <benchmark/benchmark.h>

#include "littlewood/bounds.hpp"
#include "littlewood/generators.hpp"
#include "littlewood/mps.hpp"

using namespace littlewood;

namespace {

setcore::IntegerSet random_set(std::size_t n, std::int64_t window, std::uint64_t seed) {
    setcore::GenParams p;
    p.length = n;
    p.density = static_cast<double>(n) / static_cast<double>(window);
    return setcore::generate(setcore::GenKind::random_subset, p, seed);
}

}  // namespace

static void BM_damped_factor(benchmark::State& state) {
    const auto A = random_set(64, state.range(0), 5);
    const auto mu = spectral::SupportedFunction::normalized_indicator(A);
    mps::MPSParams p;
    p.b = 1.3766505;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mps::damped_factor(mu, p).R.term_count());
    }
}
BENCHMARK(BM_damped_factor)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)
    ->Unit(benchmark::kMillisecond);

static void BM_lower_bound_chain(benchmark::State& state) {
    const auto A = random_set(static_cast<std::size_t>(state.range(0)), 1 << 14, 6);
    const auto chain = bounds::build_chain_lambda(A, 36.1127893);
    mps::MPSParams p;
    p.b = 1.3766505;
    p.tol = 1e-4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mps::lower_bound_via_test_function(A, chain, p));
    }
}
BENCHMARK(BM_lower_bound_chain)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
