#include <map>

#include "doctest.h"
#include "exact_laws.hpp"
#include "fixtures.hpp"
#include "ipq/instances.hpp"
#include "ipq/sau.hpp"

using namespace ipq;

namespace {

// TV between attempt outcomes (entries + the implicit failure cell) and a
// sub-probability law over entries
double attempt_tv(const laws::entry_law& law, const std::map<laws::entry_key, u64>& counts,
                  u64 trials) {
    laws::rat success = 0;
    for (const auto& [e, p] : law) success += p;
    u64 hits = 0;
    double acc = 0;
    for (const auto& [e, p] : law) {
        auto it = counts.find(e);
        const u64 c = it == counts.end() ? 0 : it->second;
        hits += c;
        acc += std::abs(static_cast<double>(c) / static_cast<double>(trials) -
                        static_cast<double>(p));
    }
    for (const auto& [e, c] : counts) REQUIRE(law.count(e) == 1);  // support containment
    const double fail_freq = static_cast<double>(trials - hits) / static_cast<double>(trials);
    acc += std::abs(fail_freq - static_cast<double>(laws::rat(1) - success));
    return acc / 2.0;
}

}  // namespace

TEST_CASE("light attempts hit every light entry with probability value/(n*tau)") {
    auto a = fx::mat4();

    // tau = 10: every row is light, so the law is entrywise exact
    auto law10 = laws::light_attempt_law(a, {10, 1});
    CHECK(law10.size() == 11);
    CHECK(law10[{0, 1}] == laws::rat(3, 40));
    laws::rat total = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (a.at(i, j) > 0) {
                REQUIRE(law10[{i, j}] == laws::rat(a.at(i, j), 40));
                total += law10[{i, j}];
            }
    CHECK(total == laws::rat(29, 40));
    CHECK(laws::heavy_attempt_law(a, {10, 1}).empty());

    // tau = 7: rows 1 and 2 (sum 8) turn heavy, row 3 (sum 7) stays light
    auto law7 = laws::light_attempt_law(a, {7, 1});
    for (std::size_t j = 0; j < 4; ++j) {
        if (a.at(0, j) > 0) REQUIRE(law7[{0, j}] == laws::rat(a.at(0, j), 28));
        if (a.at(3, j) > 0) REQUIRE(law7[{3, j}] == laws::rat(a.at(3, j), 28));
        REQUIRE(law7.count({1, j}) == 0);
        REQUIRE(law7.count({2, j}) == 0);
    }
}

TEST_CASE("heavy attempts weight heavy entries by their light-neighbor mass") {
    auto law = laws::heavy_attempt_law(fx::mat4(), {7, 1});
    // P((s,j)) = A_sj/(n*tau) * (light-row mass entering column s)/rowsum(s)
    CHECK(law.size() == 5);
    CHECK(law[{1, 0}] == laws::rat(9, 224));
    CHECK(law[{1, 2}] == laws::rat(15, 224));
    CHECK(law[{2, 1}] == laws::rat(5, 224));
    CHECK(law[{2, 2}] == laws::rat(1, 112));
    CHECK(law[{2, 3}] == laws::rat(1, 224));
    laws::rat total = 0;
    for (const auto& [e, p] : law) total += p;
    CHECK(total == laws::rat(1, 7));
}

TEST_CASE("per-attempt samplers track their enumerated laws") {
    auto a = fx::mat4();
    auto o = PrefixOracle::preprocess(a);
    Rng rng(313);
    constexpr u64 kTrials = 60000;
    const Rational tau{7, 1};

    std::map<laws::entry_key, u64> light_counts, heavy_counts;
    for (u64 s = 0; s < kTrials; ++s) {
        if (auto got = sample_light(o, tau, rng)) {
            REQUIRE(got->value == a.at(got->row, got->col));
            ++light_counts[{got->row, got->col}];
        }
        if (auto got = sample_heavy(o, tau, 29.0, rng)) {
            REQUIRE(got->value == a.at(got->row, got->col));
            ++heavy_counts[{got->row, got->col}];
        }
    }
    CHECK(attempt_tv(laws::light_attempt_law(a, tau), light_counts, kTrials) < 0.02);
    CHECK(attempt_tv(laws::heavy_attempt_law(a, tau), heavy_counts, kTrials) < 0.02);
}

TEST_CASE("per-attempt laws on unstructured matrices, by enumeration") {
    // the identity P_light = A_ij/(n*tau) must hold whatever the matrix is
    for (u64 seed : {91, 92}) {
        auto a = fx::random_matrix(7, 4, 1, 2, seed);
        for (u64 tau_v : {5, 9, 14}) {
            Rational tau{tau_v, 1};
            auto light = laws::light_attempt_law(a, tau);
            for (const auto& [e, p] : light) {
                REQUIRE(laws::light(laws::range_sum(a, e.first, 0, a.n), tau));
                REQUIRE(p == laws::rat(a.at(e.first, e.second), a.n * tau_v));
            }
            for (const auto& [e, p] : laws::heavy_attempt_law(a, tau)) {
                const u64 ds = laws::range_sum(a, e.first, 0, a.n);
                REQUIRE(!laws::light(ds, tau));
                laws::rat light_in = 0;  // light-row mass entering column e.first
                for (std::size_t r = 0; r < a.n; ++r)
                    if (laws::light(laws::range_sum(a, r, 0, a.n), tau))
                        light_in += a.at(r, e.first);
                REQUIRE(p == laws::rat(a.at(e.first, e.second), a.n * tau_v) * light_in / ds);
            }
        }
    }
}

TEST_CASE("driver conditional law on a mixed light/heavy fixture") {
    auto a = fx::mat4();
    auto o = PrefixOracle::preprocess(a);
    SauPlan plan;
    plan.tau = {7, 1};
    plan.m_hat = 29.0;
    plan.attempt_budget = 1000;  // ample; each loop stops at first success
    auto law = laws::driver_conditional_law(a, plan.tau);

    Rng rng(515);
    constexpr u64 kSuccesses = 50000;
    std::map<laws::entry_key, u64> counts;
    for (u64 s = 0; s < kSuccesses; ++s) {
        auto got = sau_attempts(o, plan, rng);
        REQUIRE(got.has_value());
        ++counts[{got->row, got->col}];
    }
    double acc = 0;
    for (const auto& [e, p] : law) {
        auto it = counts.find(e);
        const u64 c = it == counts.end() ? 0 : it->second;
        acc += std::abs(static_cast<double>(c) / kSuccesses - static_cast<double>(p));
        if (it != counts.end()) counts.erase(it);
    }
    REQUIRE(counts.empty());
    CHECK(acc / 2.0 < 0.02);
}

TEST_CASE("planning on the worked example") {
    auto a = fx::mat4();
    auto o = PrefixOracle::preprocess(a);
    Rng rng(99);
    SauPlan plan = sau_plan(o, 0.25, rng);
    // the scale pass is exact here, so m_hat = 1.5 * 29 on the nose
    CHECK(plan.scale.exact);
    CHECK(plan.m_hat == 43.5);
    // tau = ceil(sqrt(rho * m_hat / eps)) = ceil(sqrt(870)) = 30: all rows light
    CHECK(plan.tau == Rational{30, 1});
    CHECK(plan.attempt_budget >= 1);
    CHECK(plan.attempt_budget < 1000);
    CHECK(plan.epsilon == 0.25);
}

TEST_CASE("end-to-end sampling is uniform by weight when every row is light") {
    auto a = fx::mat4();
    auto o = PrefixOracle::preprocess(a);
    Rng rng(617);
    SauPlan plan = sau_plan(o, 0.25, rng);

    // a run may exhaust its attempt budget; those runs carry no draw and are
    // simply rerun, which leaves the law conditioned on success untouched
    constexpr u64 kSuccesses = 20000;
    std::map<laws::entry_key, u64> counts;
    u64 exhausted = 0, landed = 0;
    while (landed < kSuccesses) {
        auto got = sau_attempts(o, plan, rng);
        if (!got) {
            ++exhausted;
            continue;
        }
        REQUIRE(got->value == a.at(got->row, got->col));
        ++counts[{got->row, got->col}];
        ++landed;
    }
    CHECK(exhausted < kSuccesses / 4);  // ~7% of runs at this budget
    double acc = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double p = static_cast<double>(a.at(i, j)) / 29.0;
            auto it = counts.find({i, j});
            const u64 c = it == counts.end() ? 0 : it->second;
            if (a.at(i, j) == 0) REQUIRE(c == 0);
            acc += std::abs(static_cast<double>(c) / kSuccesses - p);
        }
    CHECK(acc / 2.0 < 0.02);
}

TEST_CASE("attempt query budgets") {
    auto a = gen_random_symmetric(32, 6, 0.3, 21);
    auto o = PrefixOracle::preprocess(a);
    Rng rng(22);
    const Rational tau{30, 1};  // splits this instance into both kinds of rows
    const u64 light_budget = 1 + regr_query_budget(32);
    const u64 heavy_budget = 2 + 2 * regr_query_budget(32);
    u64 light_hits = 0, heavy_hits = 0;
    for (int s = 0; s < 20000; ++s) {
        auto before = o.read_counter();
        auto l = sample_light(o, tau, rng);
        auto mid = o.read_counter();
        CHECK((mid - before).total() <= light_budget);
        auto h = sample_heavy(o, tau, 100.0, rng);
        CHECK((o.read_counter() - mid).total() <= heavy_budget);
        light_hits += l.has_value();
        heavy_hits += h.has_value();
    }
    CHECK(light_hits > 0);  // both paths actually exercised on this fixture
    CHECK(heavy_hits > 0);
}

TEST_CASE("single-cell matrix") {
    Matrix a(1, 5);
    a.set(0, 0, 5);
    auto o = PrefixOracle::preprocess(a);
    Rng rng(3);
    u64 hits = 0;
    for (int tries = 0; tries < 50; ++tries) {
        if (auto got = sau(o, 0.3, rng)) {
            CHECK(*got == EntrySample{0, 0, 5});
            ++hits;
        }
    }
    CHECK(hits > 0);
}

TEST_CASE("degenerate inputs") {
    Matrix z(5, 2);
    auto o = PrefixOracle::preprocess(z);
    Rng rng(8);
    CHECK_THROWS_AS(sau(o, 0.25, rng), AllZeroMatrixError);
    auto o4 = PrefixOracle::preprocess(fx::mat4());
    CHECK_THROWS_AS(sau_plan(o4, 0.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sau_plan(o4, 1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_light(o4, Rational{0, 1}, rng), std::invalid_argument);
}
