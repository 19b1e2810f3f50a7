#include "nfalen/automata.hpp"

#include <algorithm>
#include <cctype>

#include "nfalen/error.hpp"

namespace nfalen {

bool is_valid_symbol(Symbol s) noexcept {
    const auto c = static_cast<unsigned char>(s);
    return c < 0x80 && std::isgraph(c) != 0;
}

Nfa::Nfa(std::size_t state_count, std::string alphabet, StateId start, std::vector<StateId> finals,
         std::vector<Transition> transitions)
    : state_count_(state_count), alphabet_(std::move(alphabet)), start_(start), finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
    if (state_count_ == 0) throw InvalidInput("an automaton needs at least one state");
    if (state_count_ > std::size_t{0xFFFFFFFFU}) throw InvalidInput("too many states");

    for (Symbol s : alphabet_) {
        if (!is_valid_symbol(s)) throw InvalidInput("alphabet symbols must be printable, non-whitespace characters");
    }
    std::sort(alphabet_.begin(), alphabet_.end());
    if (std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
        throw InvalidInput("duplicate alphabet symbol");
    }

    const auto in_range = [this](StateId s) { return static_cast<std::size_t>(s) < state_count_; };
    if (!in_range(start_)) throw InvalidInput("start state " + std::to_string(start_) + " out of range");

    std::sort(finals_.begin(), finals_.end());
    if (std::adjacent_find(finals_.begin(), finals_.end()) != finals_.end()) {
        throw InvalidInput("duplicate final state");
    }
    for (StateId f : finals_) {
        if (!in_range(f)) throw InvalidInput("final state " + std::to_string(f) + " out of range");
    }

    for (const Transition& t : transitions_) {
        if (!in_range(t.from) || !in_range(t.to)) {
            throw InvalidInput("transition " + std::to_string(t.from) + " -> " + std::to_string(t.to)
                               + " references a state out of range");
        }
        if (!in_alphabet(t.symbol)) {
            throw InvalidInput("transition symbol '" + std::string(1, t.symbol) + "' is not in the alphabet");
        }
    }
    std::sort(transitions_.begin(), transitions_.end());
    if (std::adjacent_find(transitions_.begin(), transitions_.end()) != transitions_.end()) {
        throw InvalidInput("duplicate transition");
    }
}

bool Nfa::in_alphabet(Symbol s) const noexcept {
    return std::binary_search(alphabet_.begin(), alphabet_.end(), s);
}

bool Nfa::is_final(StateId s) const noexcept {
    return std::binary_search(finals_.begin(), finals_.end(), s);
}

std::vector<BoolMatrix::Word> Nfa::final_mask() const {
    std::vector<BoolMatrix::Word> mask((state_count_ + BoolMatrix::word_bits - 1) / BoolMatrix::word_bits, 0);
    for (StateId f : finals_) mask[f / BoolMatrix::word_bits] |= BoolMatrix::Word{1} << (f % BoolMatrix::word_bits);
    return mask;
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ == 0) throw InvalidInput("a graph needs at least one vertex");
    for (auto& [u, v] : edges_) {
        if (u >= vertex_count_ || v >= vertex_count_) {
            throw InvalidInput("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} out of range");
        }
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw InvalidInput("duplicate edge {" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + "}");
    }
}

namespace {

// Compressed adjacency: targets of state s are targets[offset[s] .. offset[s+1]).
struct Adjacency {
    std::vector<std::size_t> offset;
    std::vector<StateId> targets;

    std::span<const StateId> of(std::size_t s) const {
        return {targets.data() + offset[s], offset[s + 1] - offset[s]};
    }
};

Adjacency build_adjacency(const Nfa& nfa, bool reversed) {
    Adjacency adj;
    const std::size_t n = nfa.state_count();
    adj.offset.assign(n + 1, 0);
    for (const Transition& t : nfa.transitions()) ++adj.offset[(reversed ? t.to : t.from) + 1];
    for (std::size_t s = 0; s < n; ++s) adj.offset[s + 1] += adj.offset[s];
    adj.targets.resize(nfa.transitions().size());
    std::vector<std::size_t> fill(adj.offset.begin(), adj.offset.end() - 1);
    for (const Transition& t : nfa.transitions()) {
        const StateId src = reversed ? t.to : t.from;
        adj.targets[fill[src]++] = reversed ? t.from : t.to;
    }
    // Same target through several symbols only needs one visit.
    for (std::size_t s = 0; s < n; ++s) {
        auto first = adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offset[s]);
        auto last = adj.targets.begin() + static_cast<std::ptrdiff_t>(fill[s]);
        std::sort(first, last);
    }
    return adj;
}

std::vector<char> reachable_from(const Adjacency& adj, std::span<const StateId> sources, std::size_t n) {
    std::vector<char> seen(n, 0);
    std::vector<StateId> stack;
    for (StateId s : sources) {
        if (!seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        const StateId s = stack.back();
        stack.pop_back();
        for (StateId t : adj.of(s)) {
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

bool has_cycle(const Adjacency& adj, std::size_t n) {
    enum Color : char { white, grey, black };
    std::vector<Color> color(n, white);
    // Iterative DFS; frame = (state, next edge index). Roots and successors in ascending order.
    std::vector<std::pair<StateId, std::size_t>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != white) continue;
        color[root] = grey;
        stack.emplace_back(static_cast<StateId>(root), 0);
        while (!stack.empty()) {
            auto& [s, next] = stack.back();
            const auto succ = adj.of(s);
            if (next == succ.size()) {
                color[s] = black;
                stack.pop_back();
                continue;
            }
            const StateId t = succ[next++];
            if (color[t] == grey) return true;
            if (color[t] == white) {
                color[t] = grey;
                stack.emplace_back(t, 0);
            }
        }
    }
    return false;
}

}  // namespace

ValidationReport validate(const Nfa& nfa) {
    const std::size_t n = nfa.state_count();
    const Adjacency forward = build_adjacency(nfa, false);
    const Adjacency backward = build_adjacency(nfa, true);

    const StateId start[] = {nfa.start()};
    const auto from_start = reachable_from(forward, start, n);
    const auto to_final = reachable_from(backward, nfa.finals(), n);

    ValidationReport report;
    report.initially_connected = std::all_of(from_start.begin(), from_start.end(), [](char c) { return c != 0; });
    report.coaccessible = std::all_of(to_final.begin(), to_final.end(), [](char c) { return c != 0; });
    report.acyclic = !has_cycle(forward, n);
    report.unary = nfa.alphabet().size() == 1;
    return report;
}

bool is_acyclic(const Nfa& nfa) {
    return !has_cycle(build_adjacency(nfa, false), nfa.state_count());
}

Nfa trim(const Nfa& nfa) {
    const std::size_t n = nfa.state_count();
    const StateId start[] = {nfa.start()};
    const auto from_start = reachable_from(build_adjacency(nfa, false), start, n);
    const auto to_final = reachable_from(build_adjacency(nfa, true), nfa.finals(), n);

    if (!to_final[nfa.start()]) throw EmptyLanguage("no final state is reachable from the start state");

    constexpr StateId dropped = ~StateId{0};
    std::vector<StateId> renumber(n, dropped);
    StateId next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (from_start[s] && to_final[s]) renumber[s] = next++;
    }

    std::vector<StateId> finals;
    for (StateId f : nfa.finals()) {
        if (renumber[f] != dropped) finals.push_back(renumber[f]);
    }
    std::vector<Transition> transitions;
    for (const Transition& t : nfa.transitions()) {
        if (renumber[t.from] != dropped && renumber[t.to] != dropped) {
            transitions.push_back({renumber[t.from], t.symbol, renumber[t.to]});
        }
    }
    return Nfa(next, nfa.alphabet(), renumber[nfa.start()], std::move(finals), std::move(transitions));
}

BoolMatrix adjacency_matrix(const Nfa& nfa) {
    BoolMatrix m(nfa.state_count());
    for (const Transition& t : nfa.transitions()) m.set(t.from, t.to);
    return m;
}

void require_unary_acyclic(const Nfa& nfa) {
    if (nfa.alphabet().size() != 1) {
        throw NotUnary("automaton alphabet has " + std::to_string(nfa.alphabet().size()) + " symbols, expected 1");
    }
    if (!is_acyclic(nfa)) throw NotAcyclic("automaton transition diagram contains a cycle");
}

}  // namespace nfalen
