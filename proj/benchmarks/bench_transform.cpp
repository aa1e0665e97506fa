#include <benchmark/benchmark.h>

#include <random>

#include "dhtrand/measure.hpp"
#include "dhtrand/transform.hpp"

namespace {

dhtrand::RealSequence random_input(std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    dhtrand::RealSequence f(n);
    for (auto& v : f) {
        v = dist(rng);
    }
    return f;
}

void BM_DhtDirectSum(benchmark::State& state) {
    const auto f = random_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dhtrand::dht(f, dhtrand::DhtKernel::DirectSum));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DhtDirectSum)->RangeMultiplier(4)->Range(64, 8192)->Complexity();

void BM_DhtMatrix(benchmark::State& state) {
    const auto f = random_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dhtrand::dht(f, dhtrand::DhtKernel::Matrix));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DhtMatrix)->RangeMultiplier(4)->Range(64, 8192)->Complexity();

void BM_DhtFast(benchmark::State& state) {
    const auto f = random_input(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dhtrand::dht_fast(f));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DhtFast)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_MeasureWeights(benchmark::State& state) {
    dhtrand::BitSequence seq;
    seq.bits.resize(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(1);
    for (auto& b : seq.bits) {
        b = static_cast<std::uint8_t>(rng() % 2);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(dhtrand::measure_fast_r(seq));
    }
}
BENCHMARK(BM_MeasureWeights)->Range(256, 65536);

} // namespace

BENCHMARK_MAIN();
