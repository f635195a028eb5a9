#pragma once

#include "ipq/sau.hpp"

namespace ipq {

// Serves C with C_ij = x_i * A_ij * y_j on top of a plain oracle for A.
// A range query on C folds the weights into one base weighted query:
//   <C_{k,*}, 1_r> = <A_{k,*}, v> with v_i = x_k * y_i * [i in r]
//   <C_{*,k}, 1_r> = <A_{*,k}, v> with v_i = x_i * y_k * [i in r]
// so every simulated query costs exactly one base query.
class WeightedOracle {
public:
    WeightedOracle(PrefixOracle& base, WeightVector x, WeightVector y)
        : base_(&base), x_(std::move(x)), y_(std::move(y)), scratch_(base.dim(), 1) {
        if (x_.n != base.dim() || y_.n != base.dim())
            throw std::invalid_argument("weight dimension mismatch");
        bound_ = checked_mul(base.entry_bound(), checked_mul(x_.gamma, y_.gamma));
        const auto n = static_cast<u64>(base.dim());
        if (checked_mul(bound_, checked_mul(n, n)) > kValueBudget)
            throw OverflowError("rho * gamma1 * gamma2 * n^2 exceeds the value budget");
        scratch_.gamma = checked_mul(x_.gamma, y_.gamma);
    }

    std::size_t dim() const { return base_->dim(); }
    u64 entry_bound() const { return bound_; }

    u64 row_ip_range(std::size_t k, BitRange r) {
        validate(k, r);
        ++c_.row_queries;
        for (std::size_t i = r.lo; i < r.hi; ++i) scratch_.w[i] = x_.w[k] * y_.w[i];
        u64 s = base_->row_ip_weighted(k, scratch_);
        clear(r);
        return s;
    }

    u64 col_ip_range(std::size_t k, BitRange r) {
        validate(k, r);
        ++c_.col_queries;
        for (std::size_t i = r.lo; i < r.hi; ++i) scratch_.w[i] = x_.w[i] * y_.w[k];
        u64 s = base_->col_ip_weighted(k, scratch_);
        clear(r);
        return s;
    }

    QueryCounter read_counter() const { return c_; }
    void reset_counter() { c_ = {}; }

    const WeightVector& x() const { return x_; }
    const WeightVector& y() const { return y_; }

private:
    void validate(std::size_t k, BitRange r) const {
        if (k >= dim() || r.lo > r.hi || r.hi > dim())
            throw InvalidRangeError("oracle query with index or range out of bounds");
    }
    void clear(BitRange r) {
        std::fill(scratch_.w.begin() + static_cast<std::ptrdiff_t>(r.lo),
                  scratch_.w.begin() + static_cast<std::ptrdiff_t>(r.hi), 0);
    }

    PrefixOracle* base_;
    WeightVector x_, y_;
    WeightVector scratch_;  // zero outside the range currently being served
    u64 bound_ = 1;
    QueryCounter c_;
};

// Serves M = B + B^T over an oracle for B. M is symmetric whatever B is, and
// every simulated query costs two base queries (one row, one column):
//   <M_{i,*}, v> = <B_{i,*}, v> + <B_{*,i}, v>
template <class Base>
    requires QueryOracle<Base>
class SymmetrizedOracle {
public:
    explicit SymmetrizedOracle(Base& base) : base_(&base) {
        bound_ = checked_mul(base.entry_bound(), 2);
    }

    std::size_t dim() const { return base_->dim(); }
    u64 entry_bound() const { return bound_; }

    u64 row_ip_range(std::size_t i, BitRange r) {
        ++c_.row_queries;
        return base_->row_ip_range(i, r) + base_->col_ip_range(i, r);
    }

    u64 col_ip_range(std::size_t j, BitRange r) {
        ++c_.col_queries;
        return base_->col_ip_range(j, r) + base_->row_ip_range(j, r);
    }

    QueryCounter read_counter() const { return c_; }
    void reset_counter() { c_ = {}; }

private:
    Base* base_;
    u64 bound_ = 2;
    QueryCounter c_;
};

// Estimate of x^T A y for a general nonnegative A: estimate the total mass of
// D = C + C^T with C_ij = x_i*A_ij*y_j (which is 2 x^T A y) and halve it.
// Base-oracle cost is exactly twice the simulated query count.
inline Estimate bfe_general(PrefixOracle& base, const WeightVector& x, const WeightVector& y,
                            double eps, Rng& rng, const BfeConfig& cfg = {}) {
    const QueryCounter start = base.read_counter();
    WeightedOracle c(base, x, y);
    SymmetrizedOracle d(c);
    Estimate est = bfe(d, eps, rng, cfg);
    est.value /= 2.0;
    est.queries = base.read_counter() - start;
    return est;
}

// Almost-uniform sampling of ordered entries (i,j) with weight x_i*A_ij*y_j:
// draw from the symmetrized D, then split the unordered draw back into an
// ordered one with probability C_ij/(C_ij + C_ji) (two extra base queries; a
// diagonal draw stays (i,i)). The returned value is the original A entry.
// The stacked views and the plan are built once; draws reuse them.
class GeneralEntrySampler {
public:
    GeneralEntrySampler(PrefixOracle& base, WeightVector x, WeightVector y, double eps, Rng& rng,
                        const SauOptions& opt = {})
        : c_(base, std::move(x), std::move(y)), d_(c_), plan_(sau_plan(d_, eps, rng, opt)) {}

    GeneralEntrySampler(const GeneralEntrySampler&) = delete;  // d_ points into c_

    const SauPlan& plan() const { return plan_; }

    std::optional<EntrySample> draw(Rng& rng) {
        auto got = sau_attempts(d_, plan_, rng);
        if (!got) return std::nullopt;
        const std::size_t i = got->row, j = got->col;
        const u64 cij = c_.row_ip_range(i, {j, j + 1});
        const u64 cji = c_.row_ip_range(j, {i, i + 1});
        if (cij + cji != got->value)
            throw std::logic_error("symmetrized draw disagrees with its conversion queries");
        const WeightVector &x = c_.x(), &y = c_.y();
        if (i == j || rng.below(cij + cji) < cij)
            return EntrySample{i, j, cij / (x.w[i] * y.w[j])};
        return EntrySample{j, i, cji / (x.w[j] * y.w[i])};
    }

private:
    WeightedOracle c_;
    SymmetrizedOracle<WeightedOracle> d_;
    SauPlan plan_;
};

// single planned draw; nullopt when the attempt budget runs out
inline std::optional<EntrySample> sau_general(PrefixOracle& base, const WeightVector& x,
                                              const WeightVector& y, double eps, Rng& rng,
                                              const SauOptions& opt = {}) {
    GeneralEntrySampler s(base, x, y, eps, rng, opt);
    return s.draw(rng);
}

}  // namespace ipq
