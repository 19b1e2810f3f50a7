#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nfalen {

/**
 * Square boolean matrix with rows packed into 64-bit words.
 *
 * Bit j of row i lives in word j / 64 at position j % 64. Bits at column
 * positions >= dim() are always zero; every mutating member keeps it so.
 */
class BoolMatrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    /// Zero matrix. dim must be at least 1.
    explicit BoolMatrix(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    bool get(std::size_t row, std::size_t col) const noexcept {
        return (bits_[row * stride_ + col / word_bits] >> (col % word_bits)) & 1U;
    }
    void set(std::size_t row, std::size_t col, bool value = true) noexcept {
        Word& w = bits_[row * stride_ + col / word_bits];
        const Word mask = Word{1} << (col % word_bits);
        w = value ? (w | mask) : (w & ~mask);
    }

    std::span<const Word> row(std::size_t i) const noexcept { return {bits_.data() + i * stride_, stride_}; }

    /// Mutable row access. Callers must not set bits at positions >= dim().
    std::span<Word> row_words(std::size_t i) noexcept { return {bits_.data() + i * stride_, stride_}; }

    bool row_any(std::size_t i) const noexcept;
    /// True iff row i and `mask` (a dim()-bit packed vector) share a set bit.
    bool row_intersects(std::size_t i, std::span<const Word> mask) const noexcept;

    std::size_t count_ones() const noexcept;
    /// All padding bits are zero. Used by tests to check the class invariant.
    bool padding_clean() const noexcept;

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t dim_;
    std::size_t stride_;
    std::vector<Word> bits_;
};

enum class MulKernel {
    naive,   ///< scalar triple loop over get()/set()
    packed,  ///< row-OR accumulation over packed words
};

struct MulConfig {
    MulKernel kernel = MulKernel::packed;
    /// Worker threads for the packed kernel; output rows are split in contiguous blocks.
    unsigned threads = 1;
};

BoolMatrix identity(std::size_t dim);

/// Boolean (OR, AND) product. Throws DimensionMismatch if a.dim() != b.dim().
BoolMatrix mul(const BoolMatrix& a, const BoolMatrix& b, const MulConfig& config = {});

/**
 * a^e by binary exponentiation, pow(a, 0) == identity(a.dim()).
 *
 * Performs at most 2*floor(log2 e) multiplications. If `multiplications` is
 * non-null the number actually performed is added to it.
 */
BoolMatrix pow(const BoolMatrix& a, std::uint64_t e, const MulConfig& config = {},
               std::uint64_t* multiplications = nullptr);

}  // namespace nfalen
