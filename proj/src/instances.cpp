#include "ipq/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ipq/rng.hpp"

namespace ipq {

namespace {

// exact integer sqrt test
bool perfect_square(u64 v, u64& root) {
    auto r = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(v))));
    while (r > 0 && u128(r) * r > v) --r;
    while (u128(r + 1) * (r + 1) <= v) ++r;
    root = r;
    return u128(r) * r == v;
}

// first k entries of a seeded permutation of [0, n)
std::vector<u32> sample_distinct(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<u32> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + static_cast<std::size_t>(rng.below(n - i))]);
    idx.resize(k);
    return idx;
}

}  // namespace

u64 exact_edge_weight_sum(const GraphInstance& g) {
    u64 q = 0;
    for (auto [u, v] : g.edges) q += checked_mul(g.weight[u], g.weight[v]);
    return q;
}

Matrix gen_random_symmetric(std::size_t n, u64 rho, double p, u64 seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("density p must lie in [0, 1]");
    Matrix m(n, rho);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (rng.uniform01() >= p) continue;
            u64 v = 1 + rng.below(rho);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

Matrix gen_planted(std::size_t n, u64 rho, u64 m_target, u64 seed) {
    if (m_target == 0) throw std::invalid_argument("planted mass must be positive");
    u64 side = 0;
    const bool divisible = m_target % rho == 0;
    if (!divisible || !perfect_square(m_target / rho, side)) {
        // suggest the nearest feasible mass rho * k^2
        const double k = std::sqrt(static_cast<double>(m_target) / static_cast<double>(rho));
        u64 lo = std::max<u64>(1, static_cast<u64>(std::floor(k)));
        const u128 m_lo = u128(rho) * lo * lo, m_hi = u128(rho) * (lo + 1) * (lo + 1);
        const u128 d_lo = m_target >= m_lo ? m_target - m_lo : m_lo - m_target;
        const u128 d_hi = m_hi >= m_target ? m_hi - m_target : m_target - m_hi;
        const u64 nearest = static_cast<u64>(std::min<u128>(d_lo <= d_hi ? m_lo : m_hi, ~u64(0)));
        throw std::invalid_argument("planted mass must be rho times a perfect square; nearest feasible is " +
                                    std::to_string(nearest));
    }
    if (side > n)
        throw std::invalid_argument(
            "planted block side " + std::to_string(side) + " exceeds n; largest feasible mass is " +
            std::to_string(static_cast<u64>(std::min<u128>(u128(rho) * n * n, ~u64(0)))));
    Matrix m(n, rho);
    Rng rng(seed);
    const std::vector<u32> block = sample_distinct(n, side, rng);
    for (u32 i : block)
        for (u32 j : block) m.at(i, j) = rho;
    return m;
}

Matrix gen_zero(std::size_t n) { return Matrix(n, 1); }

GraphInstance gen_graph_family(std::size_t n, u64 rho, GraphFamily family, u64 seed) {
    u64 root = 0;
    if (n % 2 != 0 || n <= 36 || !perfect_square(n, root))
        throw std::invalid_argument("graph family needs n even, n > 36, sqrt(n) integral");
    const auto s = static_cast<std::size_t>(root);

    GraphInstance g;
    g.n = n;
    g.weight.assign(n, 1);

    Rng rng(seed);
    std::vector<u32> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        std::swap(perm[i], perm[i + static_cast<std::size_t>(rng.below(n - i))]);

    // six blocks of sqrt(n) vertices; block 2k and 2k+1 span complete bipartite H_k
    auto block = [&](std::size_t b) { return perm.begin() + static_cast<std::ptrdiff_t>(b * s); };
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b)
                g.edges.emplace_back(*(block(2 * k) + a), *(block(2 * k + 1) + b));

    // weight rho goes to exactly n/2 vertices: two of the six blocks in one
    // family, four in the other, topped up from the independent set
    const bool four_heavy = family == GraphFamily::two_heavy_blocks;
    const std::size_t heavy_blocks_lo = four_heavy ? 0 : 4;   // blocks [lo, hi) get rho
    const std::size_t heavy_blocks_hi = four_heavy ? 4 : 6;
    for (std::size_t b = heavy_blocks_lo; b < heavy_blocks_hi; ++b)
        for (std::size_t a = 0; a < s; ++a) g.weight[*(block(b) + a)] = rho;
    std::size_t still_heavy = n / 2 - (heavy_blocks_hi - heavy_blocks_lo) * s;
    for (std::size_t i = 6 * s; i < n && still_heavy > 0; ++i, --still_heavy) g.weight[perm[i]] = rho;
    return g;
}

QuadraticInstance graph_to_quadratic(const GraphInstance& g) {
    if (g.weight.size() != g.n) throw std::invalid_argument("graph weights missing");
    Matrix a(g.n, 1);
    for (auto [u, v] : g.edges) {
        if (u >= g.n || v >= g.n || u == v) throw std::invalid_argument("bad edge");
        a.at(u, v) = 1;
        a.at(v, u) = 1;
    }
    u64 gamma = 1;
    for (u64 w : g.weight) gamma = std::max(gamma, w);
    WeightVector f(g.n, gamma);
    for (std::size_t i = 0; i < g.n; ++i) f.set(i, g.weight[i]);
    validate_mass_budget(a, f.gamma, f.gamma);
    return {std::move(a), std::move(f), exact_edge_weight_sum(g)};
}

}  // namespace ipq
