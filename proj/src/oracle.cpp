#include "ipq/oracle.hpp"

namespace ipq {

PrefixOracle PrefixOracle::preprocess(const Matrix& a) {
    for (u64 v : a.a)
        if (v > a.rho) throw std::invalid_argument("matrix entry exceeds declared bound rho");

    auto t = std::make_shared<Tables>();
    t->n = a.n;
    t->rho = a.rho;
    t->row_pre.resize(a.n * a.n);
    t->col_pre.resize(a.n * a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < a.n; ++j) {
            acc += a.at(i, j);
            t->row_pre[i * a.n + j] = acc;
        }
    }
    for (std::size_t j = 0; j < a.n; ++j) {
        u64 acc = 0;
        for (std::size_t i = 0; i < a.n; ++i) {
            acc += a.at(i, j);
            t->col_pre[j * a.n + i] = acc;
        }
    }
    PrefixOracle o;
    o.t_ = std::move(t);
    return o;
}

u64 PrefixOracle::row_ip_weighted(std::size_t i, const WeightVector& v) {
    if (i >= t_->n) throw InvalidRangeError("oracle query with index out of bounds");
    if (v.n != t_->n) throw std::invalid_argument("weight dimension mismatch");
    ++c_.row_queries;
    const u64* row = t_->row_pre.data() + i * t_->n;
    u64 s = row[0] * v.w[0];
    for (std::size_t j = 1; j < t_->n; ++j) s += (row[j] - row[j - 1]) * v.w[j];
    return s;
}

u64 PrefixOracle::col_ip_weighted(std::size_t j, const WeightVector& v) {
    if (j >= t_->n) throw InvalidRangeError("oracle query with index out of bounds");
    if (v.n != t_->n) throw std::invalid_argument("weight dimension mismatch");
    ++c_.col_queries;
    const u64* col = t_->col_pre.data() + j * t_->n;
    u64 s = col[0] * v.w[0];
    for (std::size_t i = 1; i < t_->n; ++i) s += (col[i] - col[i - 1]) * v.w[i];
    return s;
}

}  // namespace ipq
