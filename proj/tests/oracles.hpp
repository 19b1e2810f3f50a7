#pragma once

// Independent reference computations. Nothing here calls into the library's
// algorithms; only the Nfa / Graph / BoolMatrix accessors are used.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "nfalen/automata.hpp"
#include "nfalen/boolmat.hpp"

namespace oracle {

using Dense = std::vector<std::vector<bool>>;

inline Dense to_dense(const nfalen::BoolMatrix& m) {
    Dense d(m.dim(), std::vector<bool>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) d[i][j] = m.get(i, j);
    return d;
}

inline Dense multiply(const Dense& a, const Dense& b) {
    const std::size_t n = a.size();
    Dense c(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool v = false;
            for (std::size_t k = 0; k < n; ++k) v = v || (a[i][k] && b[k][j]);
            c[i][j] = v;
        }
    return c;
}

/// States reachable from `from` in exactly `steps` transitions, by layered BFS
/// over the raw transition list.
inline std::set<std::size_t> reachable_exactly(const nfalen::Nfa& nfa, std::size_t from, std::size_t steps) {
    std::set<std::size_t> layer{from};
    for (std::size_t t = 0; t < steps; ++t) {
        std::set<std::size_t> next;
        for (const auto& tr : nfa.transitions())
            if (layer.count(tr.from)) next.insert(tr.to);
        layer = std::move(next);
    }
    return layer;
}

/// Lengths in [0, max_length] for which some final state is reachable from
/// the start in exactly that many steps.
inline std::vector<std::uint64_t> accepted_lengths(const nfalen::Nfa& nfa, std::size_t max_length) {
    std::vector<std::uint64_t> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
        for (std::size_t s : reachable_exactly(nfa, nfa.start(), len)) {
            if (nfa.is_final(static_cast<nfalen::StateId>(s))) {
                out.push_back(len);
                break;
            }
        }
    }
    return out;
}

/// Depth-first search for an accepting path spelling `word` from `state`.
inline bool path_accepts(const nfalen::Nfa& nfa, std::size_t state, const std::string& word, std::size_t pos) {
    if (pos == word.size()) return nfa.is_final(static_cast<nfalen::StateId>(state));
    for (const auto& tr : nfa.transitions()) {
        if (tr.from == state && tr.symbol == word[pos] && path_accepts(nfa, tr.to, word, pos + 1)) return true;
    }
    return false;
}

inline bool path_accepts(const nfalen::Nfa& nfa, const std::string& word) {
    return path_accepts(nfa, nfa.start(), word, 0);
}

/// Every word over `alphabet` of length exactly `length`.
inline std::vector<std::string> all_words(const std::string& alphabet, std::size_t length) {
    std::vector<std::string> words{""};
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char c : alphabet) next.push_back(w + c);
        words = std::move(next);
    }
    return words;
}

}  // namespace oracle
