#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "nfalen/automata.hpp"
#include "nfalen/boolmat.hpp"
#include "nfalen/reduce.hpp"

namespace nfalen {

/// Seeded generators for tests and benchmarks. Deterministic for a given
/// seed on a given standard library.
using Rng = std::mt19937_64;

struct ForwardDagOptions {
    /// Expected number of out-transitions per state (capped by the number of
    /// later states).
    double out_degree = 2.0;
    /// Probability that a state is final.
    double final_probability = 0.25;
    /// Targets of state i are drawn from i+1 .. i+window; 0 means all later states.
    std::size_t window = 0;
};

/**
 * Unary acyclic automaton on `n` states over {'a'}. States are ordered and
 * every transition goes from a lower to a higher index, so the diagram is a
 * DAG by construction. Start is state 0.
 */
Nfa random_unary_acyclic_nfa(std::size_t n, Rng& rng, const ForwardDagOptions& options = {});

/// Arbitrary (possibly cyclic) automaton: every (from, symbol, to) triple is
/// present with probability `density`, every state final with probability 1/3.
Nfa random_nfa(std::size_t n, const std::string& alphabet, double density, Rng& rng);

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Every bit set with probability `p`.
OvInstance random_ov(std::size_t n, std::size_t d, double p, Rng& rng);

BoolMatrix random_matrix(std::size_t dim, double density, Rng& rng);

}  // namespace nfalen
