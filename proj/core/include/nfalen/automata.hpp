#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfalen/boolmat.hpp"

namespace nfalen {

using StateId = std::uint32_t;
using Symbol = char;

/// Printable, non-whitespace ASCII.
bool is_valid_symbol(Symbol s) noexcept;

struct Transition {
    StateId from;
    Symbol symbol;
    StateId to;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/**
 * Nondeterministic finite automaton without epsilon transitions.
 *
 * Immutable once constructed. The constructor checks every invariant and
 * stores the alphabet, final states and transitions in sorted order, so two
 * Nfa values describing the same automaton with the same numbering compare
 * equal. Throws InvalidInput on:
 *   - state_count == 0,
 *   - a state index >= state_count anywhere,
 *   - an alphabet symbol that is not printable or repeats,
 *   - a transition on a symbol outside the alphabet,
 *   - duplicate final states or duplicate (from, symbol, to) triples.
 */
class Nfa {
public:
    Nfa(std::size_t state_count, std::string alphabet, StateId start, std::vector<StateId> finals,
        std::vector<Transition> transitions);

    std::size_t state_count() const noexcept { return state_count_; }
    const std::string& alphabet() const noexcept { return alphabet_; }
    bool in_alphabet(Symbol s) const noexcept;
    StateId start() const noexcept { return start_; }
    std::span<const StateId> finals() const noexcept { return finals_; }
    bool is_final(StateId s) const noexcept;
    /// Sorted by (from, symbol, to).
    std::span<const Transition> transitions() const noexcept { return transitions_; }

    /// Final states as a packed bit vector of state_count() bits.
    std::vector<BoolMatrix::Word> final_mask() const;

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    std::size_t state_count_;
    std::string alphabet_;
    StateId start_;
    std::vector<StateId> finals_;
    std::vector<Transition> transitions_;
};

/// Simple undirected graph. Edges are stored as (u, v) with u < v, sorted.
/// Self-loops, duplicate edges and out-of-range endpoints throw InvalidInput.
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
};

struct ValidationReport {
    bool initially_connected = false;
    bool coaccessible = false;
    bool acyclic = false;
    bool unary = false;

    bool all() const noexcept { return initially_connected && coaccessible && acyclic && unary; }
    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Linear in states + transitions.
ValidationReport validate(const Nfa& nfa);

bool is_acyclic(const Nfa& nfa);

/**
 * Keeps exactly the states that are reachable from the start and can reach a
 * final state. Surviving states are renumbered in their original order.
 * Throws EmptyLanguage when no final state is reachable from the start.
 */
Nfa trim(const Nfa& nfa);

/// Entry (i, j) is 1 iff some transition i -> j exists, on any symbol.
BoolMatrix adjacency_matrix(const Nfa& nfa);

/// Throws NotUnary / NotAcyclic unless the automaton is both.
void require_unary_acyclic(const Nfa& nfa);

}  // namespace nfalen
