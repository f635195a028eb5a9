#include "ipq/bfe.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ipq {

using boost::multiprecision::cpp_int;

namespace {

// ceil(num/den) clamped to u64; only the top table entries can get near the clamp
u64 ceil_clamped(const cpp_int& num, const cpp_int& den) {
    cpp_int q = num / den;
    if (num % den != 0) ++q;
    static const cpp_int kMax = cpp_int(~u64(0));
    if (q > kMax) return ~u64(0);
    return q.convert_to<u64>();
}

void validate_beta(Rational beta, double eps) {
    if (beta.num == 0) throw std::invalid_argument("bucket ratio beta must be positive");
    if (static_cast<double>(beta.num) * 8.0 > eps * static_cast<double>(beta.den))
        throw std::invalid_argument("bucket ratio beta must not exceed epsilon/8");
}

}  // namespace

u64 bucket_index(u64 d, Rational beta) {
    if (beta.num == 0) throw std::invalid_argument("bucket ratio beta must be positive");
    if (d == 0) return 0;
    const cpp_int num = cpp_int(beta.den) + beta.num;  // 1 + beta, over beta.den
    const cpp_int den = beta.den;
    cpp_int pn = num, pd = den;
    u64 b = 1;
    while (cpp_int(d) * pd >= pn) {  // d >= (1+beta)^b, exactly
        ++b;
        pn *= num;
        pd *= den;
    }
    return b;
}

BucketConfig make_bucket_config(std::size_t n, u64 rho, u64 ell, double eps, Rational beta) {
    if (n == 0 || rho == 0 || ell == 0) throw std::invalid_argument("bucket config with empty domain");
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
    validate_beta(beta, eps);

    const u64 top = checked_mul(rho, static_cast<u64>(n));  // largest possible row sum
    const cpp_int num = cpp_int(beta.den) + beta.num;
    const cpp_int den = beta.den;

    BucketConfig bc;
    bc.beta = beta;
    bc.upper.push_back(1);  // ceil((1+beta)^0)
    cpp_int pn = 1, pd = 1;
    u64 b = 0;
    while (pn < cpp_int(top) * pd) {  // until (1+beta)^b >= rho*n
        ++b;
        pn *= num;
        pd *= den;
        bc.upper.push_back(ceil_clamped(pn, pd));
    }
    bc.t = b + 1;  // ceil(log_{1+beta}(rho n)) + 1
    pn *= num;
    pd *= den;
    bc.upper.push_back(ceil_clamped(pn, pd));

    const double per = 1.0 / (static_cast<double>(bc.t) * static_cast<double>(n));
    const double ratio = static_cast<double>(ell) / static_cast<double>(rho);
    bc.theta = per * std::sqrt(eps / 8.0 * ratio);
    bc.classify_threshold = per * std::sqrt(eps / 6.0 * ratio);
    return bc;
}

}  // namespace ipq
