#include "nfalen/reduce.hpp"

#include <utility>

#include "nfalen/error.hpp"

namespace nfalen {

TriangleReduction reduce_triangle(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    const auto q = [n](unsigned layer, std::size_t vertex) {
        return static_cast<StateId>((layer - 1) * n + vertex);
    };

    std::vector<Transition> transitions;
    transitions.reserve(2 * (n - 1) + 6 * graph.edge_count());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        transitions.push_back({q(1, i), 'a', q(1, i + 1)});
        transitions.push_back({q(4, i), 'a', q(4, i + 1)});
    }
    for (const auto& [u, v] : graph.edges()) {
        for (unsigned layer = 1; layer <= 3; ++layer) {
            transitions.push_back({q(layer, u), 'a', q(layer + 1, v)});
            transitions.push_back({q(layer, v), 'a', q(layer + 1, u)});
        }
    }

    std::vector<LayerPosition> layer_of;
    layer_of.reserve(4 * n);
    for (unsigned layer = 1; layer <= 4; ++layer) {
        for (std::size_t i = 0; i < n; ++i) layer_of.push_back({layer, i});
    }

    return TriangleReduction{
        Nfa(4 * n, "a", q(1, 0), {q(4, n - 1)}, std::move(transitions)),
        static_cast<std::uint64_t>(n) + 2,
        std::move(layer_of),
    };
}

BoolMatrix graph_matrix(const Graph& graph) {
    BoolMatrix m(graph.vertex_count());
    for (const auto& [u, v] : graph.edges()) {
        m.set(u, v);
        m.set(v, u);
    }
    return m;
}

bool has_triangle_matmul(const Graph& graph, const MulConfig& config) {
    const BoolMatrix m = graph_matrix(graph);
    const BoolMatrix cube = mul(mul(m, m, config), m, config);
    for (std::size_t i = 0; i < cube.dim(); ++i) {
        if (cube.get(i, i)) return true;
    }
    return false;
}

bool has_triangle_brute(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : graph.edges()) adj[u][v] = adj[v][u] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!adj[i][j]) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (adj[j][k] && adj[i][k]) return true;
            }
        }
    }
    return false;
}

OvInstance::OvInstance(std::vector<BitVector> v, std::vector<BitVector> w)
    : v_(std::move(v)), w_(std::move(w)), d_(v_.empty() ? 0 : v_.front().size()) {
    if (v_.empty()) throw InvalidInput("orthogonal vectors instance needs n >= 1");
    if (w_.size() != v_.size()) throw InvalidInput("v and w lists must have the same length");
    if (d_ == 0) throw InvalidInput("orthogonal vectors instance needs d >= 1");
    for (const auto* list : {&v_, &w_}) {
        for (const BitVector& vec : *list) {
            if (vec.size() != d_) throw InvalidInput("all vectors must have dimension " + std::to_string(d_));
        }
    }
}

OvReduction reduce_ov(const OvInstance& instance) {
    const std::size_t n = instance.n();
    const std::size_t d = instance.d();
    const std::size_t block = d + 2;
    const std::size_t path = (n - 1) * block;  // P

    const auto top = [](std::size_t offset) { return static_cast<StateId>(offset); };
    const auto x = static_cast<StateId>(path + 1);
    const auto gadget = [&](std::size_t i, std::size_t k) { return static_cast<StateId>(path + 2 + i * d + k); };
    const auto y = static_cast<StateId>(path + 2 + n * d);
    const auto bottom = [&](std::size_t offset) { return static_cast<StateId>(y + 1 + offset); };
    const std::size_t state_count = static_cast<std::size_t>(bottom(path)) + 1;

    std::vector<Transition> transitions;
    const auto wildcard = [&](StateId from, StateId to) {
        transitions.push_back({from, '0', to});
        transitions.push_back({from, '1', to});
    };

    OvLandmarks marks;
    marks.x = x;
    marks.y = y;
    marks.accept = bottom(path);

    for (std::size_t o = 0; o < path; ++o) wildcard(top(o), top(o + 1));
    for (std::size_t j = 0; j < n; ++j) {
        marks.a.push_back(top(j * block));
        wildcard(top(j * block), x);
    }

    for (std::size_t i = 0; i < n; ++i) {
        marks.gadget_start.push_back(gadget(i, 0));
        wildcard(x, gadget(i, 0));
        const BitVector& v = instance.v()[i];
        for (std::size_t k = 0; k < d; ++k) {
            const StateId to = (k + 1 == d) ? y : gadget(i, k + 1);
            if (v[k]) {
                transitions.push_back({gadget(i, k), '0', to});
            } else {
                wildcard(gadget(i, k), to);
            }
        }
    }

    for (std::size_t j = 0; j + 1 < n; ++j) {
        marks.b.push_back(bottom(j * block + 1));
        wildcard(y, bottom(j * block + 1));
    }
    for (std::size_t o = 0; o < path; ++o) wildcard(bottom(o), bottom(o + 1));

    std::string input;
    input.reserve(n * block);
    for (const BitVector& w : instance.w()) {
        input += "00";
        for (bool bit : w) input += bit ? '1' : '0';
    }

    return OvReduction{
        Nfa(state_count, "01", top(0), {y, bottom(path)}, std::move(transitions)),
        std::move(input),
        std::move(marks),
    };
}

bool ov_brute(const OvInstance& instance) {
    for (const BitVector& v : instance.v()) {
        for (const BitVector& w : instance.w()) {
            bool orthogonal = true;
            for (std::size_t k = 0; k < instance.d() && orthogonal; ++k) orthogonal = !(v[k] && w[k]);
            if (orthogonal) return true;
        }
    }
    return false;
}

}  // namespace nfalen
