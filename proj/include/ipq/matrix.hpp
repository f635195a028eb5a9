#pragma once

#include <vector>

#include "ipq/common.hpp"

namespace ipq {

// half-open index range [lo, hi); the ambient dimension is checked by whoever
// consumes the range
struct BitRange {
    std::size_t lo = 0;
    std::size_t hi = 0;

    static BitRange full(std::size_t n) { return {0, n}; }
    std::size_t len() const { return hi - lo; }
    bool empty() const { return lo >= hi; }

    friend bool operator==(const BitRange&, const BitRange&) = default;
};

// Dense nonnegative integer matrix with a declared entry bound rho.
// Construction rejects anything whose total mass could overflow u64
// (rho * n^2 must fit the global budget, see common.hpp).
struct Matrix {
    std::size_t n = 0;
    u64 rho = 1;
    std::vector<u64> a;  // row-major, n*n

    Matrix(std::size_t n_, u64 rho_) : n(n_), rho(rho_) {
        if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
        if (rho == 0) throw std::invalid_argument("entry bound must be positive");
        if (checked_mul(checked_mul(rho, n), n) > kValueBudget)
            throw OverflowError("rho * n^2 exceeds the value budget");
        a.assign(n * n, 0);
    }

    u64 at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    u64& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

    // sets a checked entry; the only mutation path the parsers/generators use
    void set(std::size_t i, std::size_t j, u64 v) {
        if (v > rho) throw std::invalid_argument("entry exceeds declared bound rho");
        a[i * n + j] = v;
    }
};

// Nonnegative integer weights with declared bound gamma.
struct WeightVector {
    std::size_t n = 0;
    u64 gamma = 1;
    std::vector<u64> w;

    WeightVector(std::size_t n_, u64 gamma_) : n(n_), gamma(gamma_), w(n_, 0) {
        if (n == 0) throw std::invalid_argument("weight vector dimension must be positive");
        if (gamma == 0) throw std::invalid_argument("weight bound must be positive");
    }

    static WeightVector ones(std::size_t n) {
        WeightVector v(n, 1);
        v.w.assign(n, 1);
        return v;
    }

    void set(std::size_t i, u64 v) {
        if (v > gamma) throw std::invalid_argument("weight exceeds declared bound gamma");
        w[i] = v;
    }
};

// throws OverflowError unless rho*gamma1*gamma2*n^2 fits the budget
void validate_mass_budget(const Matrix& a, u64 gamma1, u64 gamma2);

// x^T A y by direct summation; the ground truth everything else is tested against
u64 exact_bilinear(const Matrix& a, const WeightVector& x, const WeightVector& y);

// <A_{i,*}, 1>
u64 exact_row_sum(const Matrix& a, std::size_t i);

// 1^T A 1, total mass m
u64 exact_total(const Matrix& a);

bool is_symmetric(const Matrix& a);

}  // namespace ipq
