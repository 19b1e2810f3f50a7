#include <benchmark/benchmark.h>

#include "nfalen/boolmat.hpp"
#include "nfalen/random.hpp"

namespace {

template <nfalen::MulKernel Kernel>
void BM_Mul(benchmark::State& state) {
    nfalen::Rng rng(42);
    const auto dim = static_cast<std::size_t>(state.range(0));
    const nfalen::BoolMatrix a = nfalen::random_matrix(dim, 0.1, rng);
    const nfalen::BoolMatrix b = nfalen::random_matrix(dim, 0.1, rng);
    for (auto _ : state) benchmark::DoNotOptimize(nfalen::mul(a, b, {Kernel}));
    state.SetComplexityN(state.range(0));
}

void BM_Pow(benchmark::State& state) {
    nfalen::Rng rng(7);
    const nfalen::BoolMatrix a = nfalen::random_matrix(256, 0.01, rng);
    const auto e = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nfalen::pow(a, e));
}

}  // namespace

BENCHMARK(BM_Mul<nfalen::MulKernel::packed>)->RangeMultiplier(2)->Range(32, 1024)->Complexity();
BENCHMARK(BM_Mul<nfalen::MulKernel::naive>)->RangeMultiplier(2)->Range(32, 256)->Complexity();
BENCHMARK(BM_Pow)->RangeMultiplier(16)->Range(1, 1 << 20);
