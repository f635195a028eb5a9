#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ipq {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Every value the library ever sums is bounded by rho*gamma1*gamma2*n^2.
// Inputs are rejected unless that product stays below this budget, which
// leaves two spare bits for the symmetrized (A + A^T) doubling.
inline constexpr u64 kValueBudget = u64(1) << 62;

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroMassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AllZeroMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a*b, throwing instead of wrapping.
inline u64 checked_mul(u64 a, u64 b) {
    u64 r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer product out of range");
    return r;
}

// smallest k with 2^k >= x (x >= 1)
inline u64 ceil_log2(u64 x) {
    return x <= 1 ? 0 : std::bit_width(x - 1);
}

// Reduced nonnegative fraction. Only the handful of comparisons the samplers
// need live here; anything heavier goes through exact integer draws instead.
struct Rational {
    u64 num = 0;
    u64 den = 1;

    static Rational of(u64 num, u64 den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        u64 g = std::gcd(num, den);
        if (g == 0) return {0, 1};
        return {num / g, den / g};
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

// d <= num/den
inline bool le_ratio(u64 d, const Rational& r) {
    return u128(d) * r.den <= u128(r.num);
}

}  // namespace ipq
