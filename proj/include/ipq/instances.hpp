#pragma once

#include <utility>
#include <vector>

#include "ipq/matrix.hpp"

namespace ipq {

// Undirected weighted-vertex graph; edges are unordered pairs without
// self-loops, weight[v] is the vertex weight f(v).
struct GraphInstance {
    std::size_t n = 0;
    std::vector<std::pair<u32, u32>> edges;
    std::vector<u64> weight;
};

// sum over edges of f(u)*f(v), by direct traversal
u64 exact_edge_weight_sum(const GraphInstance& g);

// Symmetric matrix with entries drawn uniformly from [1, rho] at density p
// (each unordered pair independently, then mirrored). Fixed seed, fixed bytes.
Matrix gen_random_symmetric(std::size_t n, u64 rho, double p, u64 seed);

// All-rho block on a random index set I with |I| = sqrt(m_target/rho),
// zero elsewhere, so the total mass is exactly m_target. Throws
// std::invalid_argument (naming the nearest feasible mass) when m_target is
// not rho times a perfect square, or the block does not fit.
Matrix gen_planted(std::size_t n, u64 rho, u64 m_target, u64 seed);

Matrix gen_zero(std::size_t n);

// Two graph families that a quadratic-form estimator must tell apart:
// an independent set of n - 6*sqrt(n) vertices plus three complete bipartite
// blocks H1(A1,A2), H2(A3,A4), H3(A5,A6), each side sqrt(n), 3n edges total.
// Half the vertices carry weight 1, half weight rho.
//   one_heavy_block:  A1..A4 weight 1, A5,A6 weight rho  -> sum (rho^2+2)n
//   two_heavy_blocks: A1..A4 weight rho, A5,A6 weight 1  -> sum (2rho^2+1)n
// Requires n even, n > 36, sqrt(n) integral.
enum class GraphFamily { one_heavy_block, two_heavy_blocks };

GraphInstance gen_graph_family(std::size_t n, u64 rho, GraphFamily family, u64 seed);

// Adapter to the estimation surface: 0/1 adjacency matrix plus f as weights.
// f^T A f counts every edge twice, so q = f^T A f / 2; the adapter owns the /2.
struct QuadraticInstance {
    Matrix a;
    WeightVector f;
    u64 q;
};

QuadraticInstance graph_to_quadratic(const GraphInstance& g);

}  // namespace ipq
