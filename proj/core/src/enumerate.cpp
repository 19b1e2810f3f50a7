#include "nfalen/enumerate.hpp"

#include <bit>
#include <vector>

namespace nfalen {

PaddedNfa pad_with_chain(const Nfa& nfa) {
    require_unary_acyclic(nfa);
    const std::size_t n = nfa.state_count();
    const auto k = static_cast<unsigned>(std::bit_width(n - 1));
    const std::size_t chain = std::size_t{1} << k;
    const Symbol letter = nfa.alphabet().front();
    const auto offset = static_cast<StateId>(n);

    std::vector<Transition> transitions(nfa.transitions().begin(), nfa.transitions().end());
    transitions.reserve(transitions.size() + chain);
    for (std::size_t i = 0; i + 1 < chain; ++i) {
        transitions.push_back({static_cast<StateId>(offset + i), letter, static_cast<StateId>(offset + i + 1)});
    }
    transitions.push_back({static_cast<StateId>(offset + chain - 1), letter, nfa.start()});

    std::vector<StateId> finals(nfa.finals().begin(), nfa.finals().end());
    return PaddedNfa{
        Nfa(n + chain, nfa.alphabet(), offset, std::move(finals), std::move(transitions)),
        k,
        offset,
        n,
    };
}

LengthSet enumerate_fast(const Nfa& nfa, const MulConfig& config, EnumerateStats* stats) {
    const PaddedNfa padded = pad_with_chain(nfa);
    BoolMatrix power = adjacency_matrix(padded.nfa);
    std::uint64_t multiplications = 0;
    for (unsigned i = 0; i < padded.k; ++i) {
        power = mul(power, power, config);
        ++multiplications;
    }

    const auto finals = padded.nfa.final_mask();
    LengthSet result;
    for (std::size_t i = 0; i < padded.original_count; ++i) {
        if (power.row_intersects(padded.chain_state(i), finals)) result.lengths.push_back(i);
    }

    if (stats) {
        stats->k = padded.k;
        stats->matrix_dim = power.dim();
        stats->multiplications = multiplications;
    }
    return result;
}

}  // namespace nfalen
