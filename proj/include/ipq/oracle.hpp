#pragma once

#include <concepts>
#include <memory>

#include "ipq/matrix.hpp"

namespace ipq {

// per-session tally; a query is one oracle call regardless of range length
struct QueryCounter {
    u64 row_queries = 0;
    u64 col_queries = 0;

    u64 total() const { return row_queries + col_queries; }
    QueryCounter operator-(const QueryCounter& o) const {
        return {row_queries - o.row_queries, col_queries - o.col_queries};
    }
    friend bool operator==(const QueryCounter&, const QueryCounter&) = default;
};

// Anything the estimators can talk to: range inner products against rows and
// columns, a declared entry bound, and an owned query tally.
template <class O>
concept QueryOracle = requires(O& o, const O& co, std::size_t i, BitRange r) {
    { co.dim() } -> std::convertible_to<std::size_t>;
    { co.entry_bound() } -> std::convertible_to<u64>;
    { o.row_ip_range(i, r) } -> std::same_as<u64>;
    { o.col_ip_range(i, r) } -> std::same_as<u64>;
    { co.read_counter() } -> std::same_as<QueryCounter>;
    { o.reset_counter() };
};

// Answers <A_{i,*}, v> and <A_{*,j}, v> for 0/1 range vectors in O(1) and for
// weighted vectors in O(n), each at the price of one counted query. Built once
// from a matrix; the matrix itself is not retained, so the entries are only
// reachable through queries. Sessions share the immutable tables and own
// independent counters.
class PrefixOracle {
public:
    static PrefixOracle preprocess(const Matrix& a);

    // same tables, fresh zero counter; cheap, safe to hand to another thread
    PrefixOracle session() const {
        PrefixOracle o;
        o.t_ = t_;
        return o;
    }

    std::size_t dim() const { return t_->n; }
    u64 entry_bound() const { return t_->rho; }

    u64 row_ip_range(std::size_t i, BitRange r) {
        check(i, r);
        ++c_.row_queries;
        if (r.lo == r.hi) return 0;
        const u64* row = t_->row_pre.data() + i * t_->n;
        u64 s = row[r.hi - 1];
        return r.lo ? s - row[r.lo - 1] : s;
    }

    u64 col_ip_range(std::size_t j, BitRange r) {
        check(j, r);
        ++c_.col_queries;
        if (r.lo == r.hi) return 0;
        const u64* col = t_->col_pre.data() + j * t_->n;
        u64 s = col[r.hi - 1];
        return r.lo ? s - col[r.lo - 1] : s;
    }

    // <A_{i,*}, v> for an arbitrary nonnegative integer vector; one row query
    u64 row_ip_weighted(std::size_t i, const WeightVector& v);

    // <A_{*,j}, v>; one column query
    u64 col_ip_weighted(std::size_t j, const WeightVector& v);

    QueryCounter read_counter() const { return c_; }
    void reset_counter() { c_ = {}; }

private:
    PrefixOracle() = default;

    struct Tables {
        std::size_t n = 0;
        u64 rho = 1;
        std::vector<u64> row_pre;  // row_pre[i*n + j] = sum_{k<=j} A[i][k]
        std::vector<u64> col_pre;  // col_pre[j*n + i] = sum_{k<=i} A[k][j]
    };

    void check(std::size_t i, BitRange r) const {
        if (i >= t_->n || r.lo > r.hi || r.hi > t_->n)
            throw InvalidRangeError("oracle query with index or range out of bounds");
    }

    std::shared_ptr<const Tables> t_;
    QueryCounter c_;
};

}  // namespace ipq
