#include "nfalen/random.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace nfalen {

namespace {

bool coin(Rng& rng, double p) {
    return std::bernoulli_distribution(std::clamp(p, 0.0, 1.0))(rng);
}

}  // namespace

Nfa random_unary_acyclic_nfa(std::size_t n, Rng& rng, const ForwardDagOptions& options) {
    std::vector<Transition> transitions;
    std::vector<StateId> finals;
    for (std::size_t i = 0; i < n; ++i) {
        if (coin(rng, options.final_probability)) finals.push_back(static_cast<StateId>(i));
        std::size_t candidates = n - 1 - i;
        if (options.window != 0) candidates = std::min(candidates, options.window);
        if (candidates == 0) continue;

        // Each candidate target independently with probability out_degree / candidates;
        // geometric skips make this linear in the number of transitions drawn.
        const double p = std::min(1.0, options.out_degree / static_cast<double>(candidates));
        if (p >= 1.0) {
            for (std::size_t j = 1; j <= candidates; ++j) {
                transitions.push_back({static_cast<StateId>(i), 'a', static_cast<StateId>(i + j)});
            }
            continue;
        }
        std::geometric_distribution<std::size_t> skip(p);
        for (std::size_t j = 1 + skip(rng); j <= candidates; j += 1 + skip(rng)) {
            transitions.push_back({static_cast<StateId>(i), 'a', static_cast<StateId>(i + j)});
        }
    }
    return Nfa(n, "a", 0, std::move(finals), std::move(transitions));
}

Nfa random_nfa(std::size_t n, const std::string& alphabet, double density, Rng& rng) {
    std::vector<Transition> transitions;
    std::vector<StateId> finals;
    for (std::size_t from = 0; from < n; ++from) {
        if (coin(rng, 1.0 / 3.0)) finals.push_back(static_cast<StateId>(from));
        for (char symbol : alphabet) {
            for (std::size_t to = 0; to < n; ++to) {
                if (coin(rng, density)) {
                    transitions.push_back({static_cast<StateId>(from), symbol, static_cast<StateId>(to)});
                }
            }
        }
    }
    return Nfa(n, alphabet, 0, std::move(finals), std::move(transitions));
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::vector<Graph::Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng, p)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

OvInstance random_ov(std::size_t n, std::size_t d, double p, Rng& rng) {
    const auto draw = [&] {
        std::vector<BitVector> list(n, BitVector(d));
        for (auto& vec : list) {
            for (std::size_t k = 0; k < d; ++k) vec[k] = coin(rng, p);
        }
        return list;
    };
    auto v = draw();
    auto w = draw();
    return OvInstance(std::move(v), std::move(w));
}

BoolMatrix random_matrix(std::size_t dim, double density, Rng& rng) {
    BoolMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (coin(rng, density)) m.set(i, j);
        }
    }
    return m;
}

}  // namespace nfalen
