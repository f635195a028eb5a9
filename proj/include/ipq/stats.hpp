#pragma once

#include <span>
#include <vector>

#include "ipq/common.hpp"

namespace ipq {

// total variation distance between an empirical count vector and a law given
// as probabilities over the same index space; counts and law must align
double tv_distance(std::span<const u64> counts, u64 total, std::span<const double> law);

struct ChiSquare {
    double statistic = 0;
    std::size_t dof = 0;  // positive-probability cells minus one
};

// Pearson statistic of counts against expected N*p; cells with p = 0 but
// nonzero counts make the statistic infinite. Advisory only; the hard
// acceptance gates use tv_distance.
ChiSquare chi_square(std::span<const u64> counts, u64 total, std::span<const double> law);

}  // namespace ipq
