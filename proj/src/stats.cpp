#include "ipq/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ipq {

double tv_distance(std::span<const u64> counts, u64 total, std::span<const double> law) {
    if (counts.size() != law.size()) throw std::invalid_argument("counts and law differ in size");
    if (total == 0) throw std::invalid_argument("empty sample");
    double acc = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        acc += std::abs(static_cast<double>(counts[i]) / static_cast<double>(total) - law[i]);
    return acc / 2.0;
}

ChiSquare chi_square(std::span<const u64> counts, u64 total, std::span<const double> law) {
    if (counts.size() != law.size()) throw std::invalid_argument("counts and law differ in size");
    if (total == 0) throw std::invalid_argument("empty sample");
    ChiSquare out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (law[i] <= 0.0) {
            if (counts[i] != 0) out.statistic = std::numeric_limits<double>::infinity();
            continue;
        }
        const double expected = static_cast<double>(total) * law[i];
        const double diff = static_cast<double>(counts[i]) - expected;
        out.statistic += diff * diff / expected;
        ++out.dof;
    }
    if (out.dof > 0) --out.dof;
    return out;
}

}  // namespace ipq
