#include "nfalen/accept.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>

#include "nfalen/error.hpp"

namespace nfalen {

bool Frontier::empty() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](BoolMatrix::Word w) { return w == 0; });
}

std::size_t Frontier::size() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool Frontier::intersects(std::span<const BoolMatrix::Word> mask) const noexcept {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        if (bits_[w] & mask[w]) return true;
    }
    return false;
}

void Frontier::advance(const BoolMatrix& successors, Frontier& scratch) {
    std::fill(scratch.bits_.begin(), scratch.bits_.end(), 0);
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        BoolMatrix::Word bits = bits_[w];
        while (bits != 0) {
            const std::size_t s = w * BoolMatrix::word_bits + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            const auto row = successors.row(s);
            for (std::size_t x = 0; x < row.size(); ++x) scratch.bits_[x] |= row[x];
        }
    }
    std::swap(bits_, scratch.bits_);
    assert(size() <= size_);
}

bool accepts_length(const Nfa& nfa, std::uint64_t length, const MulConfig& config) {
    if (length == 0) return nfa.is_final(nfa.start());
    const BoolMatrix power = pow(adjacency_matrix(nfa), length, config);
    return power.row_intersects(nfa.start(), nfa.final_mask());
}

bool simulate(const Nfa& nfa, std::string_view word) {
    const std::string& alphabet = nfa.alphabet();
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!nfa.in_alphabet(word[i])) throw SymbolNotInAlphabet(word[i], i);
    }

    // One successor matrix per alphabet symbol, built once.
    const std::size_t n = nfa.state_count();
    std::vector<BoolMatrix> successors(alphabet.size(), BoolMatrix(n));
    for (const Transition& t : nfa.transitions()) {
        const auto index = static_cast<std::size_t>(std::lower_bound(alphabet.begin(), alphabet.end(), t.symbol)
                                                    - alphabet.begin());
        successors[index].set(t.from, t.to);
    }

    Frontier current(n);
    Frontier scratch(n);
    current.insert(nfa.start());
    for (char c : word) {
        const auto index =
            static_cast<std::size_t>(std::lower_bound(alphabet.begin(), alphabet.end(), c) - alphabet.begin());
        current.advance(successors[index], scratch);
        if (current.empty()) return false;
    }
    return current.intersects(nfa.final_mask());
}

LengthSet enumerate_naive(const Nfa& nfa) {
    require_unary_acyclic(nfa);
    const std::size_t n = nfa.state_count();
    const BoolMatrix step = adjacency_matrix(nfa);
    const auto finals = nfa.final_mask();

    LengthSet result;
    Frontier current(n);
    Frontier scratch(n);
    current.insert(nfa.start());
    for (std::size_t length = 0; length < n; ++length) {
        if (length > 0) current.advance(step, scratch);
        if (current.intersects(finals)) result.lengths.push_back(length);
    }
    return result;
}

}  // namespace nfalen
