#include <benchmark/benchmark.h>

#include <random>

#include "qdissect/designated.hpp"
#include "qdissect/pochhammer.hpp"
#include "qdissect/series.hpp"

using namespace qdissect;

namespace {

TruncatedSeries dense_random(std::size_t order, const CoefficientRing& ring,
                             unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(-50, 50);
    std::vector<mpz_class> v(order);
    for (auto& x : v) x = dist(rng);
    return TruncatedSeries::from_coeffs(v, order, ring);
}

void BM_mul_dense(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    auto ring = CoefficientRing::integers();
    auto a = dense_random(order, ring, 1);
    auto b = dense_random(order, ring, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mul_dense)->Range(256, 4096)->Complexity();

void BM_mul_dense_mod(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    auto ring = CoefficientRing::integers_mod(8);
    auto a = dense_random(order, ring, 3);
    auto b = dense_random(order, ring, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mul_dense_mod)->Range(1024, 16384)->Complexity();

void BM_pochhammer(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    auto ring = CoefficientRing::integers();
    for (auto _ : state) {
        benchmark::DoNotOptimize(pochhammer_series(1, order, ring));
    }
}
BENCHMARK(BM_pochhammer)->Range(1024, 65536);

void BM_invert_f1(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    auto ring = CoefficientRing::integers();
    auto f1 = pochhammer_series(1, order, ring);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(f1));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_invert_f1)->Range(1024, 16384)->Complexity();

void BM_expand_pd2_exact(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    EtaQuotient eq;
    eq.with_factor(4, 1).with_factor(6, 2);
    eq.with_factor(1, -1).with_factor(3, -1).with_factor(12, -1);
    auto ring = CoefficientRing::integers();
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand(eq, order, ring));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_expand_pd2_exact)->Range(1024, 16384)->Complexity();

void BM_expand_pd2_mod8(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    EtaQuotient eq;
    eq.with_factor(4, 1).with_factor(6, 2);
    eq.with_factor(1, -1).with_factor(3, -1).with_factor(12, -1);
    auto ring = CoefficientRing::integers_mod(8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand(eq, order, ring));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_expand_pd2_mod8)->Range(4096, 262144)->Complexity();

void BM_product_oracle(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    auto ring = CoefficientRing::integers();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            pd_product_series(order, PartRestriction::k_regular(2), ring));
    }
}
BENCHMARK(BM_product_oracle)->Range(256, 2048);

} // namespace

BENCHMARK_MAIN();
