#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace nfalen {

/// Accepted word lengths of a unary acyclic automaton, strictly increasing.
struct LengthSet {
    std::vector<std::uint64_t> lengths;

    bool contains(std::uint64_t length) const { return std::binary_search(lengths.begin(), lengths.end(), length); }
    bool empty() const noexcept { return lengths.empty(); }

    friend bool operator==(const LengthSet&, const LengthSet&) = default;
};

}  // namespace nfalen
