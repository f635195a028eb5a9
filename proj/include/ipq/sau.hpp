#pragma once

#include "ipq/bfe.hpp"

namespace ipq {

// A row is light when its sum is at most tau, heavy otherwise (the boundary
// row counts as light). The two per-attempt samplers below hit every entry
// (i,j) of their side with probability A_ij/(n*tau) -- exactly for light rows,
// and within the factor (1 - rho*m_hat/tau^2) for heavy rows -- so a fair mix
// of the two, conditioned on success, is almost uniform by entry weight.

struct SauOptions {
    double c_gamma = 4.0;  // scales the attempt budget
    BfeConfig bfe{};       // how the mass scale m_hat is obtained
};

// the resolved sampling plan; all coins derived from it are exact integer draws
struct SauPlan {
    Rational tau{1, 1};
    double m_hat = 0;       // mass scale, m <= m_hat <= 2m when the scale pass met its promise
    u64 attempt_budget = 0;
    double epsilon = 0;
    Estimate scale;         // the estimation pass behind m_hat
};

// Uniform row r (no query), one row-sum query d. Heavy rows fail; light rows
// fail with probability (tau-d)/tau, otherwise descend within the row.
// P(success and entry (i,j)) = A_ij/(n*tau) for every light-row entry.
// Query cost <= 1 + (2*ceil(log2 n) + 2).
template <QueryOracle O>
std::optional<EntrySample> sample_light(O& o, Rational tau, Rng& rng) {
    if (tau.num == 0) throw std::invalid_argument("tau must be positive");
    const std::size_t n = o.dim();
    const auto r = static_cast<std::size_t>(rng.below(n));
    const u64 d = o.row_ip_range(r, BitRange::full(n));
    if (!le_ratio(d, tau)) return std::nullopt;  // heavy row
    // fail with probability (tau - d)/tau = (num - d*den)/num
    const u64 cut = tau.num - d * tau.den;
    if (rng.below(tau.num) < cut) return std::nullopt;
    return regr(o, r, BitRange::full(n), rng);
}

// Uniform row r; if light, survive with probability d/tau, walk to a neighbor
// column s by descent, and when row s is heavy descend within it. For a
// symmetric matrix, P(success and entry (s,j)) lies between
// (1 - rho*m_hat/tau^2) * A_sj/(n*tau) and A_sj/(n*tau) for heavy-row entries.
// Query cost <= 2 + 2*(2*ceil(log2 n) + 2).
template <QueryOracle O>
std::optional<EntrySample> sample_heavy(O& o, Rational tau, [[maybe_unused]] double m_hat, Rng& rng) {
    if (tau.num == 0) throw std::invalid_argument("tau must be positive");
    const std::size_t n = o.dim();
    const auto r = static_cast<std::size_t>(rng.below(n));
    const u64 d = o.row_ip_range(r, BitRange::full(n));
    if (!le_ratio(d, tau)) return std::nullopt;  // only light rows vote for their heavy neighbors
    if (rng.below(tau.num) >= d * tau.den) return std::nullopt;  // survive with probability d/tau
    const EntrySample step = regr(o, r, BitRange::full(n), rng);
    const u64 ds = o.row_ip_range(step.col, BitRange::full(n));
    if (le_ratio(ds, tau)) return std::nullopt;  // landed on a light row
    return regr(o, step.col, BitRange::full(n), rng);
}

// Resolves tau and the attempt budget from a mass-scale estimation pass at
// epsilon' = 1/3 (scaled by 3/2, so m <= m_hat <= 2m whenever that pass is
// within its interval). Throws AllZeroMatrixError when the scale comes back 0.
template <QueryOracle O>
SauPlan sau_plan(O& o, double eps, Rng& rng, const SauOptions& opt = {}) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    SauPlan plan;
    plan.epsilon = eps;
    plan.scale = bfe(o, 1.0 / 3.0, rng, opt.bfe);
    plan.m_hat = 1.5 * plan.scale.value;
    if (!(plan.m_hat > 0)) throw AllZeroMatrixError("matrix mass estimated as zero");

    const auto n = static_cast<double>(o.dim());
    const auto rho = static_cast<double>(o.entry_bound());

    // integer tau = ceil(sqrt(rho*m_hat/eps)) keeps every coin exact and
    // preserves the heavy-side distortion bound (tau^2 >= rho*m_hat/eps)
    const double want = rho * plan.m_hat / eps;
    auto tau = static_cast<u64>(std::ceil(std::sqrt(want)));
    while (static_cast<double>(tau) * static_cast<double>(tau) < want) ++tau;
    plan.tau = Rational{std::max<u64>(tau, 1), 1};

    const double gamma = opt.c_gamma * n * std::sqrt(rho) /
                         ((1.0 - eps) * std::sqrt(eps * plan.m_hat)) *
                         std::max(1.0, std::log(n));
    plan.attempt_budget = gamma >= 9.0e18 ? static_cast<u64>(9.0e18)
                                          : std::max<u64>(1, static_cast<u64>(std::ceil(gamma)));
    return plan;
}

// Up to the planned number of attempts: fair coin between the light and heavy
// samplers, first success wins. nullopt = budget exhausted.
template <QueryOracle O>
std::optional<EntrySample> sau_attempts(O& o, const SauPlan& plan, Rng& rng) {
    for (u64 a = 0; a < plan.attempt_budget; ++a) {
        auto got = rng.below(2) == 0 ? sample_light(o, plan.tau, rng)
                                     : sample_heavy(o, plan.tau, plan.m_hat, rng);
        if (got) return got;
    }
    return std::nullopt;
}

// One almost-uniform weighted entry draw: plan (mass scale, tau, budget), then
// attempt. P(entry (i,j) | success) is within (1 +- eps) of A_ij/m.
template <QueryOracle O>
std::optional<EntrySample> sau(O& o, double eps, Rng& rng, const SauOptions& opt = {}) {
    const SauPlan plan = sau_plan(o, eps, rng, opt);
    return sau_attempts(o, plan, rng);
}

}  // namespace ipq
