#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "ipq/regr.hpp"

namespace ipq {

struct BfeConfig {
    double c_k = 1.0;                // scales the sample size K
    bool allow_exact_fallback = true;  // full scan (n row queries) once K >= n ln n
    std::optional<Rational> beta;    // bucket ratio; default derived from epsilon
};

// Geometric row-sum buckets: bucket b holds the rows with
// (1+beta)^(b-1) <= sum < (1+beta)^b, bucket 0 the zero rows. Boundaries are
// kept as exact integers upper[b] = ceil((1+beta)^b), so classification never
// depends on log rounding.
struct BucketConfig {
    Rational beta{1, 8};
    u64 t = 1;                     // bucket count; every sum <= rho*n lands in [0, t]
    double theta = 0;              // fraction of rows that makes a bucket genuinely large
    double classify_threshold = 0; // sample fraction at which a bucket is declared large
    std::vector<u64> upper;        // upper[b] = ceil((1+beta)^b), b in [0, t]

    u64 bucket_index(u64 d) const {
        if (d == 0) return 0;
        if (d >= upper.back()) throw std::out_of_range("row sum exceeds the bucketed domain");
        return static_cast<u64>(std::upper_bound(upper.begin(), upper.end(), d) - upper.begin());
    }

    // (1+beta)^b, the mass a bucket-b row is scored with
    double value(u64 b) const { return std::pow(1.0 + beta.to_double(), static_cast<double>(b)); }
};

// exact bucket index of a positive row sum, without a precomputed table
u64 bucket_index(u64 d, Rational beta);

BucketConfig make_bucket_config(std::size_t n, u64 rho, u64 ell, double eps, Rational beta);

// largest num/2^k <= eps/8 with num >= 8, reduced
inline Rational default_beta(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    for (u64 den = 128; den <= (u64(1) << 50); den <<= 1) {
        u64 num = static_cast<u64>(std::floor(eps * static_cast<double>(den) / 8.0));
        if (num >= 8) return Rational::of(num, den);
    }
    throw std::invalid_argument("epsilon too small to derive a bucket ratio");
}

// K = c_k * sqrt(rho) * n / sqrt(ell) * eps^-4.5 * ln^2(rho n) * ln(1/eps)
inline u64 bfe_sample_size(std::size_t n, u64 rho, u64 ell, double eps, double c_k) {
    double k = c_k * std::sqrt(static_cast<double>(rho)) * static_cast<double>(n) /
               std::sqrt(static_cast<double>(ell)) * std::pow(eps, -4.5) *
               std::pow(std::log(static_cast<double>(rho) * static_cast<double>(n)), 2) *
               std::log(1.0 / eps);
    if (!(k >= 1.0)) return 1;
    if (k >= 9.0e18) return static_cast<u64>(9.0e18);
    return static_cast<u64>(std::ceil(k));
}

struct Estimate {
    double value = 0;
    double epsilon = 0;
    u64 lower_bound_used = 1;   // the ell the reported phase ran with
    QueryCounter queries;       // this oracle's delta over the whole run
    u64 seed = 0;
    bool exact = false;         // true when the full-scan fallback answered
    u64 sample_count = 0;       // K of the reported phase (0 when exact)
    u64 bucket_count = 0;       // t of the reported phase
    u32 phases = 1;             // lower bounds tried, including the accepted one
    std::vector<std::pair<u64, double>> alpha;  // (large bucket, estimated small-row mass fraction)
};

// One estimation pass under the promise total >= ell (up to the declared
// epsilon). Samples K row sums into buckets, declares buckets large by sample
// fraction, then corrects each large bucket for the mass its rows share with
// small-bucket rows: resample |S_b| member rows, descend to a neighbor column,
// and check (one extra row-sum query) whether that column's row fell in a
// small bucket. Estimate: (n/K) * sum over large b of (1+alpha_b)*|S_b|*(1+beta)^b.
template <QueryOracle O>
Estimate bfe_with_lower_bound(O& o, u64 ell, double eps, Rng& rng, const BfeConfig& cfg = {}) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
    if (ell == 0) throw std::invalid_argument("mass lower bound must be positive");
    const std::size_t n = o.dim();
    const u64 rho = o.entry_bound();
    const QueryCounter start = o.read_counter();

    Estimate est;
    est.epsilon = eps;
    est.lower_bound_used = ell;
    est.seed = rng.seed();

    const u64 k_samples = bfe_sample_size(n, rho, ell, eps, cfg.c_k);
    est.sample_count = k_samples;

    // with this many samples a scan is cheaper; n row queries, exact answer
    if (cfg.allow_exact_fallback &&
        static_cast<double>(k_samples) >= static_cast<double>(n) * std::log(static_cast<double>(n))) {
        u64 total = 0;
        for (std::size_t i = 0; i < n; ++i) total += o.row_ip_range(i, BitRange::full(n));
        est.value = static_cast<double>(total);
        est.exact = true;
        est.sample_count = 0;
        est.queries = o.read_counter() - start;
        return est;
    }

    const BucketConfig bc = make_bucket_config(n, rho, ell, eps, cfg.beta ? *cfg.beta : default_beta(eps));
    est.bucket_count = bc.t;

    std::vector<std::vector<u32>> samples(bc.t + 1);
    for (u64 s = 0; s < k_samples; ++s) {
        auto r = static_cast<std::size_t>(rng.below(n));
        u64 d = o.row_ip_range(r, BitRange::full(n));
        samples[bc.bucket_index(d)].push_back(static_cast<u32>(r));
    }

    std::vector<char> large(bc.t + 1, 0);  // bucket 0 stays small by construction
    for (u64 b = 1; b <= bc.t; ++b)
        large[b] = !samples[b].empty() &&
                   static_cast<double>(samples[b].size()) / static_cast<double>(k_samples) >=
                       bc.classify_threshold;

    double value = 0;
    for (u64 b = 1; b <= bc.t; ++b) {
        if (!large[b]) continue;
        const auto& bucket = samples[b];
        u64 hits = 0;
        for (std::size_t s = 0; s < bucket.size(); ++s) {
            std::size_t row = bucket[static_cast<std::size_t>(rng.below(bucket.size()))];
            EntrySample e = regr(o, row, BitRange::full(n), rng);
            u64 d2 = o.row_ip_range(e.col, BitRange::full(n));
            if (!large[bc.bucket_index(d2)]) ++hits;
        }
        double alpha = static_cast<double>(hits) / static_cast<double>(bucket.size());
        est.alpha.emplace_back(b, alpha);
        value += (1.0 + alpha) * static_cast<double>(bucket.size()) * bc.value(b);
    }
    est.value = value * static_cast<double>(n) / static_cast<double>(k_samples);
    est.queries = o.read_counter() - start;
    return est;
}

// Full estimator: geometric search over the promise, ell_k = max(1, rho*n^2 / 2^k),
// accepting the first pass whose estimate reaches its own promise (an exact
// fallback pass is accepted outright; at ell = 1 the pass stands regardless).
template <QueryOracle O>
Estimate bfe(O& o, double eps, Rng& rng, const BfeConfig& cfg = {}) {
    const auto n = static_cast<u64>(o.dim());
    const u64 ell0 = checked_mul(o.entry_bound(), checked_mul(n, n));
    const QueryCounter start = o.read_counter();
    Estimate est;
    for (u32 k = 0;; ++k) {
        u64 ell = std::max<u64>(1, k < 64 ? ell0 >> k : 0);
        est = bfe_with_lower_bound(o, ell, eps, rng, cfg);
        est.phases = k + 1;
        if (est.exact || est.value >= static_cast<double>(ell) || ell == 1) break;
    }
    est.queries = o.read_counter() - start;
    return est;
}

}  // namespace ipq
