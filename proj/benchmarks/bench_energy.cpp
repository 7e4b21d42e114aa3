#include <benchmark/benchmark.h>

#include <random>

#include "littlewood/energy.hpp"
#include "littlewood/generators.hpp"

using namespace littlewood;

namespace {

setcore::IntegerSet random_set(std::size_t n, std::int64_t window, std::uint64_t seed) {
    setcore::GenParams p;
    p.length = n;
    p.density = static_cast<double>(n) / static_cast<double>(window);
    return setcore::generate(setcore::GenKind::random_subset, p, seed);
}

}  // namespace

static void BM_additive_energy_random(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto A = random_set(n, static_cast<std::int64_t>(16 * n), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(setcore::additive_energy(A).energy);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_additive_energy_random)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_additive_energy_interval(benchmark::State& state) {
    setcore::GenParams p;
    p.length = static_cast<std::size_t>(state.range(0));
    const auto A = setcore::generate(setcore::GenKind::interval, p, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(setcore::additive_energy(A).energy);
    }
}
BENCHMARK(BM_additive_energy_interval)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

static void BM_cross_energy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto A = random_set(n, static_cast<std::int64_t>(8 * n), 2);
    const auto B = random_set(n, static_cast<std::int64_t>(8 * n), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(setcore::cross_energy(A, B));
    }
}
BENCHMARK(BM_cross_energy)->RangeMultiplier(4)->Range(64, 4096);
