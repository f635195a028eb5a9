#pragma once

#include <initializer_list>

#include "ipq/matrix.hpp"
#include "ipq/rng.hpp"

namespace fx {

inline ipq::Matrix from_rows(std::initializer_list<std::initializer_list<ipq::u64>> rows, ipq::u64 rho) {
    ipq::Matrix m(rows.size(), rho);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (ipq::u64 v : row) m.set(i, j++, v);
        ++i;
    }
    return m;
}

// the worked 4x4 example used throughout the tests: total mass 29,
// row sums 6, 8, 8, 7
inline ipq::Matrix mat4() {
    return from_rows({{1, 3, 0, 2}, {3, 0, 5, 0}, {0, 5, 2, 1}, {2, 0, 1, 4}}, 5);
}

inline ipq::WeightVector weights(std::initializer_list<ipq::u64> vals, ipq::u64 gamma) {
    ipq::WeightVector v(vals.size(), gamma);
    std::size_t i = 0;
    for (ipq::u64 w : vals) v.set(i++, w);
    return v;
}

// 2x2 asymmetric fixture: x^T A y = 23, C = x_i*A_ij*y_j = [[3,0],[12,8]]
inline ipq::Matrix mat2() { return from_rows({{1, 0}, {2, 4}}, 4); }
inline ipq::WeightVector x2() { return weights({1, 2}, 2); }
inline ipq::WeightVector y2() { return weights({3, 1}, 3); }

// unstructured test matrix; each entry nonzero with probability num/den
inline ipq::Matrix random_matrix(std::size_t n, ipq::u64 rho, ipq::u64 num, ipq::u64 den,
                                 ipq::u64 seed) {
    ipq::Rng rng(seed);
    ipq::Matrix m(n, rho);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng.chance(num, den)) m.set(i, j, 1 + rng.below(rho));
    return m;
}

inline ipq::WeightVector random_weights(std::size_t n, ipq::u64 gamma, ipq::u64 seed) {
    ipq::Rng rng(seed);
    ipq::WeightVector v(n, gamma);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng.below(gamma + 1));
    return v;
}

}  // namespace fx
