#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nfalen/automata.hpp"
#include "nfalen/boolmat.hpp"
#include "nfalen/length_set.hpp"

namespace nfalen {

/// A set of states packed into words, the same layout as a BoolMatrix row.
class Frontier {
public:
    explicit Frontier(std::size_t state_count)
        : size_(state_count), bits_((state_count + BoolMatrix::word_bits - 1) / BoolMatrix::word_bits, 0) {}

    std::size_t state_count() const noexcept { return size_; }
    void insert(StateId s) noexcept { bits_[s / BoolMatrix::word_bits] |= BoolMatrix::Word{1} << (s % BoolMatrix::word_bits); }
    bool contains(StateId s) const noexcept { return (bits_[s / BoolMatrix::word_bits] >> (s % BoolMatrix::word_bits)) & 1U; }
    bool empty() const noexcept;
    std::size_t size() const noexcept;
    bool intersects(std::span<const BoolMatrix::Word> mask) const noexcept;

    /// Replaces *this by the union of `successors` rows over its members.
    void advance(const BoolMatrix& successors, Frontier& scratch);

    std::span<const BoolMatrix::Word> words() const noexcept { return bits_; }

private:
    std::size_t size_;
    std::vector<BoolMatrix::Word> bits_;
};

/**
 * Does the automaton accept some word of exactly `length` symbols?
 *
 * Raises the adjacency matrix to `length` and inspects the start row at the
 * final columns. Length 0 is answered by start membership in the finals.
 */
bool accepts_length(const Nfa& nfa, std::uint64_t length, const MulConfig& config = {});

/// Frontier simulation of one word. Throws SymbolNotInAlphabet.
bool simulate(const Nfa& nfa, std::string_view word);

/**
 * Accepted lengths of a unary acyclic automaton by n - 1 frontier updates
 * over the adjacency matrix. Throws NotUnary / NotAcyclic.
 */
LengthSet enumerate_naive(const Nfa& nfa);

}  // namespace nfalen
