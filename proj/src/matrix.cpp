#include "ipq/matrix.hpp"

namespace ipq {

void validate_mass_budget(const Matrix& a, u64 gamma1, u64 gamma2) {
    u64 b = checked_mul(a.rho, checked_mul(gamma1, gamma2));
    b = checked_mul(b, checked_mul(static_cast<u64>(a.n), static_cast<u64>(a.n)));
    if (b > kValueBudget) throw OverflowError("rho * gamma1 * gamma2 * n^2 exceeds the value budget");
}

u64 exact_bilinear(const Matrix& a, const WeightVector& x, const WeightVector& y) {
    if (x.n != a.n || y.n != a.n) throw std::invalid_argument("weight dimension mismatch");
    validate_mass_budget(a, x.gamma, y.gamma);
    u64 total = 0;
    for (std::size_t i = 0; i < a.n; ++i) {
        if (x.w[i] == 0) continue;
        u64 row = 0;
        const u64* ai = a.a.data() + i * a.n;
        for (std::size_t j = 0; j < a.n; ++j) row += ai[j] * y.w[j];
        total += x.w[i] * row;
    }
    return total;
}

u64 exact_row_sum(const Matrix& a, std::size_t i) {
    if (i >= a.n) throw std::invalid_argument("row index out of range");
    u64 s = 0;
    const u64* ai = a.a.data() + i * a.n;
    for (std::size_t j = 0; j < a.n; ++j) s += ai[j];
    return s;
}

u64 exact_total(const Matrix& a) {
    u64 s = 0;
    for (u64 v : a.a) s += v;
    return s;
}

bool is_symmetric(const Matrix& a) {
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = i + 1; j < a.n; ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    return true;
}

}  // namespace ipq
