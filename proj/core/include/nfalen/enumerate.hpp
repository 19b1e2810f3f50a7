#pragma once

#include <cstddef>
#include <cstdint>

#include "nfalen/automata.hpp"
#include "nfalen/boolmat.hpp"
#include "nfalen/length_set.hpp"

namespace nfalen {

/**
 * A unary acyclic automaton with a chain p_0 -> ... -> p_{2^k - 1} -> q_0
 * prepended, where 2^k is the smallest power of two >= the original state
 * count n. Original states keep indices 0..n-1 and p_i is state n + i; the
 * new start is p_0 and the final states are unchanged.
 *
 * The original automaton accepts a^i iff some final state is exactly 2^k
 * steps away from p_i.
 */
struct PaddedNfa {
    Nfa nfa;
    unsigned k = 0;
    StateId chain_offset = 0;
    std::size_t original_count = 0;

    std::size_t chain_length() const noexcept { return std::size_t{1} << k; }
    StateId chain_state(std::size_t i) const noexcept { return chain_offset + static_cast<StateId>(i); }
};

/// Throws NotUnary / NotAcyclic.
PaddedNfa pad_with_chain(const Nfa& nfa);

struct EnumerateStats {
    unsigned k = 0;
    std::size_t matrix_dim = 0;
    std::uint64_t multiplications = 0;
};

/**
 * Accepted lengths of a unary acyclic automaton by k repeated squarings of
 * the padded adjacency matrix. Exactly k multiplications are performed; the
 * count is reported through `stats` when given. Throws NotUnary / NotAcyclic.
 */
LengthSet enumerate_fast(const Nfa& nfa, const MulConfig& config = {}, EnumerateStats* stats = nullptr);

}  // namespace nfalen
