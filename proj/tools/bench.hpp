#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nfalen/random.hpp"

namespace nfalen::cli {

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 1;
    std::size_t trials = 1;
    /// Timed runs per engine and instance; the median is reported. At least 3.
    std::size_t repetitions = 3;
    ForwardDagOptions generator;
};

struct BenchRow {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double naive_seconds = 0;
    double fast_seconds = 0;
    std::uint64_t multiplications = 0;
    bool agreement = false;
};

/// Trial t of every size uses seed + t.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// One '#' line describing the generator, the CSV header, then one line per row.
std::string format_bench(const BenchOptions& options, const std::vector<BenchRow>& rows);

}  // namespace nfalen::cli
