#include "nfalen/boolmat.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <thread>

#include "nfalen/error.hpp"

namespace nfalen {

BoolMatrix::BoolMatrix(std::size_t dim)
    : dim_(dim), stride_((dim + word_bits - 1) / word_bits), bits_(dim * stride_, 0) {
    if (dim == 0) {
        throw InvalidInput("BoolMatrix dimension must be at least 1");
    }
}

bool BoolMatrix::row_any(std::size_t i) const noexcept {
    const auto r = row(i);
    return std::any_of(r.begin(), r.end(), [](Word w) { return w != 0; });
}

bool BoolMatrix::row_intersects(std::size_t i, std::span<const Word> mask) const noexcept {
    const auto r = row(i);
    for (std::size_t w = 0; w < stride_; ++w) {
        if (r[w] & mask[w]) return true;
    }
    return false;
}

std::size_t BoolMatrix::count_ones() const noexcept {
    std::size_t total = 0;
    for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BoolMatrix::padding_clean() const noexcept {
    const std::size_t used = dim_ % word_bits;
    if (used == 0) return true;
    const Word pad = ~Word{0} << used;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (bits_[i * stride_ + stride_ - 1] & pad) return false;
    }
    return true;
}

BoolMatrix identity(std::size_t dim) {
    BoolMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i);
    return m;
}

namespace {

void mul_naive(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (a.get(i, k) && b.get(k, j)) {
                    out.set(i, j);
                    break;
                }
            }
        }
    }
}

// Row i of the product is the OR of b's rows k over the set bits k of a's row i.
void mul_packed_rows(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out, std::size_t first,
                     std::size_t last) {
    const std::size_t stride = a.words_per_row();
    for (std::size_t i = first; i < last; ++i) {
        const auto arow = a.row(i);
        auto dst = out.row_words(i);
        for (std::size_t w = 0; w < stride; ++w) {
            BoolMatrix::Word bits = arow[w];
            while (bits != 0) {
                const std::size_t k = w * BoolMatrix::word_bits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                const auto src = b.row(k);
                for (std::size_t x = 0; x < stride; ++x) dst[x] |= src[x];
            }
        }
    }
}

void mul_packed(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out, unsigned threads) {
    const std::size_t n = a.dim();
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
    if (workers == 1) {
        mul_packed_rows(a, b, out, 0, n);
        return;
    }
    // Each worker owns a disjoint block of output rows, so the result does not
    // depend on scheduling.
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t block = (n + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
        const std::size_t first = t * block;
        const std::size_t last = std::min(n, first + block);
        if (first >= last) break;
        pool.emplace_back([&a, &b, &out, first, last] { mul_packed_rows(a, b, out, first, last); });
    }
}

}  // namespace

BoolMatrix mul(const BoolMatrix& a, const BoolMatrix& b, const MulConfig& config) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("cannot multiply " + std::to_string(a.dim()) + "x" + std::to_string(a.dim())
                                + " by " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
    }
    BoolMatrix out(a.dim());
    switch (config.kernel) {
    case MulKernel::naive:
        mul_naive(a, b, out);
        break;
    case MulKernel::packed:
        mul_packed(a, b, out, config.threads);
        break;
    }
    return out;
}

BoolMatrix pow(const BoolMatrix& a, std::uint64_t e, const MulConfig& config, std::uint64_t* multiplications) {
    std::uint64_t count = 0;
    std::optional<BoolMatrix> result;
    BoolMatrix base = a;
    while (e != 0) {
        if (e & 1U) {
            if (result) {
                result = mul(*result, base, config);
                ++count;
            } else {
                result = base;
            }
        }
        e >>= 1U;
        if (e != 0) {
            base = mul(base, base, config);
            ++count;
        }
    }
    if (multiplications) *multiplications += count;
    return result ? std::move(*result) : identity(a.dim());
}

}  // namespace nfalen
