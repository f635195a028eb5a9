#pragma once

#include "ipq/oracle.hpp"
#include "ipq/rng.hpp"

namespace ipq {

// one positive matrix entry, value = A[row][col] > 0
struct EntrySample {
    std::size_t row = 0;
    std::size_t col = 0;
    u64 value = 0;

    friend bool operator==(const EntrySample&, const EntrySample&) = default;
};

// Samples a column of row `row` restricted to r, with probability
// proportional to the entry value: P(col = j) = A[row][j] / <A_{row,*}, 1_r>.
//
// Binary descent: query the mass of the left half (the ceiling of the split),
// recurse left with probability left/mass, derive the right mass without a
// second query. The root mass is queried once on entry. Query cost is
// 1 + ceil(log2 len), within the 2*ceil(log2 len) + 2 budget. All coin flips
// are exact integer draws, so the law holds exactly, not up to rounding.
template <QueryOracle O>
EntrySample regr(O& o, std::size_t row, BitRange r, Rng& rng) {
    if (row >= o.dim() || r.empty() || r.hi > o.dim())
        throw InvalidRangeError("regr: empty range or index out of bounds");
    u64 mass = o.row_ip_range(row, r);
    if (mass == 0) throw ZeroMassError("regr: range has zero mass");

    std::size_t lo = r.lo, hi = r.hi;
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo + 1) / 2;  // left half takes the ceiling
        u64 left = o.row_ip_range(row, {lo, mid});
        if (rng.below(mass) < left) {
            hi = mid;
            mass = left;
        } else {
            lo = mid;
            mass -= left;
        }
    }
    return {row, lo, mass};
}

// query budget regr() is promised to stay within, for a range of this length
inline u64 regr_query_budget(std::size_t range_len) {
    return 2 * ceil_log2(range_len) + 2;
}

}  // namespace ipq
