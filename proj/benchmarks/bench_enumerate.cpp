#include <benchmark/benchmark.h>

#include "nfalen/accept.hpp"
#include "nfalen/enumerate.hpp"
#include "nfalen/random.hpp"
#include "nfalen/reduce.hpp"

namespace {

nfalen::Nfa instance(std::int64_t n) {
    nfalen::Rng rng(static_cast<std::uint64_t>(n));
    return nfalen::random_unary_acyclic_nfa(static_cast<std::size_t>(n), rng);
}

void BM_EnumerateNaive(benchmark::State& state) {
    const nfalen::Nfa nfa = instance(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nfalen::enumerate_naive(nfa));
    state.SetComplexityN(state.range(0));
}

void BM_EnumerateFast(benchmark::State& state) {
    const nfalen::Nfa nfa = instance(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nfalen::enumerate_fast(nfa));
    state.SetComplexityN(state.range(0));
}

void BM_AcceptsLength(benchmark::State& state) {
    const nfalen::Nfa nfa = instance(state.range(0));
    const auto length = static_cast<std::uint64_t>(state.range(0) / 2);
    for (auto _ : state) benchmark::DoNotOptimize(nfalen::accepts_length(nfa, length));
}

void BM_SimulateOvReduction(benchmark::State& state) {
    nfalen::Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const nfalen::OvReduction r = nfalen::reduce_ov(nfalen::random_ov(n, 16, 0.7, rng));
    for (auto _ : state) benchmark::DoNotOptimize(nfalen::simulate(r.nfa, r.input));
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_EnumerateNaive)->RangeMultiplier(2)->Range(64, 2048)->Complexity();
BENCHMARK(BM_EnumerateFast)->RangeMultiplier(2)->Range(64, 2048)->Complexity();
BENCHMARK(BM_AcceptsLength)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_SimulateOvReduction)->RangeMultiplier(2)->Range(8, 256)->Complexity();
