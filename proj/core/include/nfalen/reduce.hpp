#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nfalen/automata.hpp"
#include "nfalen/boolmat.hpp"

namespace nfalen {

// ---------------------------------------------------------------------------
// Triangle detection -> unary acyclic length acceptance
// ---------------------------------------------------------------------------

struct LayerPosition {
    unsigned layer;       ///< 1..4
    std::size_t vertex;   ///< 0..n-1
};

/**
 * Four layers of n states each; state q_i^j has index (j - 1) * n + i.
 * Layers 1 and 4 are chains q_i -> q_{i+1}. Each undirected edge {u, v}
 * yields q_u^j -> q_v^{j+1} and q_v^j -> q_u^{j+1} for j = 1, 2, 3.
 * Start q_0^1, single final q_{n-1}^4.
 *
 * An accepting path entering layer 2 from q_i^1 and leaving layer 3 into
 * q_l^4 has length i + 3 + (n - 1 - l), so a^{n+2} is accepted iff the
 * graph has a closed walk of length 3, i.e. a triangle.
 */
struct TriangleReduction {
    Nfa nfa;
    std::uint64_t target_length;
    std::vector<LayerPosition> layer_of;  ///< indexed by StateId
};

TriangleReduction reduce_triangle(const Graph& graph);

/// Symmetric adjacency matrix of the graph.
BoolMatrix graph_matrix(const Graph& graph);

/// Cubes the adjacency matrix with two products and looks for a 1 on the diagonal.
bool has_triangle_matmul(const Graph& graph, const MulConfig& config = {});

/// Triple loop over i < j < k.
bool has_triangle_brute(const Graph& graph);

// ---------------------------------------------------------------------------
// Orthogonal vectors -> NFA acceptance
// ---------------------------------------------------------------------------

using BitVector = std::vector<bool>;

/// Two lists of n boolean vectors, all of dimension d. Throws InvalidInput on
/// n == 0, d == 0, list length != n, or a vector of the wrong dimension.
class OvInstance {
public:
    OvInstance(std::vector<BitVector> v, std::vector<BitVector> w);

    std::size_t n() const noexcept { return v_.size(); }
    std::size_t d() const noexcept { return d_; }
    const std::vector<BitVector>& v() const noexcept { return v_; }
    const std::vector<BitVector>& w() const noexcept { return w_; }

    friend bool operator==(const OvInstance&, const OvInstance&) = default;

private:
    std::vector<BitVector> v_;
    std::vector<BitVector> w_;
    std::size_t d_;
};

struct OvLandmarks {
    std::vector<StateId> a;             ///< a_1..a_n on the top path
    StateId x;
    std::vector<StateId> gadget_start;  ///< first state of the gadget for v_i
    StateId y;
    std::vector<StateId> b;             ///< b_1..b_{n-1} on the bottom path
    StateId accept;                     ///< last state of the bottom path
};

/**
 * NFA over {'0','1'} and input word 00w_1 00w_2 ... 00w_n such that the NFA
 * accepts the word iff some v_i . w_j == 0.
 *
 * Layout, with P = (n - 1)(d + 2):
 *   top path t_0..t_P, wildcard steps; a_j = t_{(j-1)(d+2)}; a_j -> x.
 *   x -> first state of every gadget.
 *   gadget i: d steps, step k reads '0' if v_i[k] = 1 and anything otherwise;
 *     the last step enters the shared state y.
 *   y -> b_j = u_{(j-1)(d+2)+1} for j < n; bottom path u_0..u_P, wildcard steps.
 *   finals: y (for j = n) and u_P.
 * Wildcards are one transition per symbol. Both the state count and the
 * transition count are at most ov_size_constant * d * n.
 */
struct OvReduction {
    Nfa nfa;
    std::string input;
    OvLandmarks landmarks;
};

inline constexpr std::size_t ov_size_constant = 24;

OvReduction reduce_ov(const OvInstance& instance);

/// Direct O(n^2 d) search for an orthogonal pair.
bool ov_brute(const OvInstance& instance);

}  // namespace nfalen
