#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "nfalen/accept.hpp"
#include "nfalen/enumerate.hpp"

namespace nfalen::cli {

namespace {

template <typename F>
double median_seconds(std::size_t repetitions, F&& run) {
    std::vector<double> samples;
    samples.reserve(repetitions);
    for (std::size_t r = 0; r < repetitions; ++r) {
        const auto begin = std::chrono::steady_clock::now();
        run();
        const auto end = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double>(end - begin).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    const std::size_t repetitions = std::max<std::size_t>(options.repetitions, 3);
    std::vector<BenchRow> rows;
    for (std::size_t n : options.sizes) {
        for (std::size_t t = 0; t < options.trials; ++t) {
            BenchRow row;
            row.n = n;
            row.seed = options.seed + t;
            Rng rng(row.seed);
            const Nfa nfa = random_unary_acyclic_nfa(n, rng, options.generator);

            LengthSet naive, fast;
            EnumerateStats stats;
            row.naive_seconds = median_seconds(repetitions, [&] { naive = enumerate_naive(nfa); });
            row.fast_seconds = median_seconds(repetitions, [&] { fast = enumerate_fast(nfa, {}, &stats); });
            row.multiplications = stats.multiplications;
            row.agreement = naive == fast;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_bench(const BenchOptions& options, const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "# generator=forward-dag out_degree=" << options.generator.out_degree
        << " final_probability=" << options.generator.final_probability << " window=" << options.generator.window
        << " seed=" << options.seed << " trials=" << options.trials
        << " repetitions=" << std::max<std::size_t>(options.repetitions, 3) << " time=median_seconds\n";
    out << "n,seed,naive_time,fast_time,multiplications_used,agreement\n";
    char buffer[64];
    for (const BenchRow& row : rows) {
        out << row.n << ',' << row.seed << ',';
        std::snprintf(buffer, sizeof buffer, "%.9f,%.9f", row.naive_seconds, row.fast_seconds);
        out << buffer << ',' << row.multiplications << ',' << (row.agreement ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace nfalen::cli
