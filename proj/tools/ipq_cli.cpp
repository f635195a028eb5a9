// Command-line front end: generate instances, estimate masses and bilinear
// forms through the query oracle, sample entries, and brute-force-verify.
// Every command prints one JSON document; all randomness is seeded, so equal
// invocations produce equal bytes except for the wall_time_ms field.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipq/instances.hpp"
#include "ipq/io.hpp"
#include "ipq/reduction.hpp"
#include "ipq/stats.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace ipq;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::size_t kVerifyLimit = 8192;  // brute-force checks refuse larger n

struct InputPaths {
    std::string matrix, x, y, graph, weights;
};

struct AssertFlags {
    std::optional<double> rel_err;        // estimate: worst |est-exact|/exact
    std::optional<double> interval_rate;  // estimate: trials within (1 +- eps)*exact
    std::optional<double> tv;             // sample / regr-test: total variation bound
    std::optional<u64> budget;            // max oracle queries for one trial/draw
};

// a loaded problem, routed either to the plain symmetric path or through the
// weighted reduction
struct Problem {
    Matrix a;
    std::optional<WeightVector> x, y;  // set => general (weighted) route
    std::string form;                  // entry-mass | bilinear | quadratic
    bool symmetric = false;
};

void add_input_options(CLI::App* cmd, InputPaths& in) {
    cmd->add_option("--matrix", in.matrix, "matrix file (dense or sparse format)");
    cmd->add_option("--x", in.x, "left weight vector file");
    cmd->add_option("--y", in.y, "right weight vector file");
    cmd->add_option("--graph", in.graph, "graph file; estimates the vertex-weighted form");
    cmd->add_option("--weights", in.weights, "vertex weight file for --graph");
}

Problem load_problem(const InputPaths& in) {
    if (!in.graph.empty()) {
        if (!in.matrix.empty() || !in.x.empty() || !in.y.empty())
            throw std::invalid_argument("--graph cannot be combined with --matrix/--x/--y");
        GraphInstance g = load_graph_file(in.graph);
        if (!in.weights.empty()) {
            WeightVector w = load_weights_file(in.weights);
            if (w.n != g.n) throw std::invalid_argument("graph and weight dimensions differ");
            g.weight = w.w;
        }
        QuadraticInstance qi = graph_to_quadratic(g);
        Problem p{std::move(qi.a), qi.f, std::move(qi.f), "quadratic", true};
        p.symmetric = true;
        return p;
    }
    if (in.matrix.empty()) throw std::invalid_argument("either --matrix or --graph is required");
    if (!in.weights.empty()) throw std::invalid_argument("--weights requires --graph");
    Matrix a = load_matrix_file(in.matrix);
    const bool sym = is_symmetric(a);
    if (!in.x.empty() || !in.y.empty()) {
        if (in.x.empty() || in.y.empty())
            throw std::invalid_argument("--x and --y must be given together");
        WeightVector x = load_weights_file(in.x), y = load_weights_file(in.y);
        if (x.n != a.n || y.n != a.n) throw std::invalid_argument("weight dimension mismatch");
        return {std::move(a), std::move(x), std::move(y), "bilinear", sym};
    }
    if (sym) return {std::move(a), std::nullopt, std::nullopt, "entry-mass", true};
    // an asymmetric matrix without weights still means total mass: all-ones weights
    auto ones = WeightVector::ones(a.n);
    return {std::move(a), ones, std::move(ones), "entry-mass", false};
}

// the brute-force reference this problem's estimate is judged against
double exact_of(const Problem& p) {
    if (p.a.n > kVerifyLimit)
        throw std::invalid_argument("brute-force verification refused for n > " +
                                    std::to_string(kVerifyLimit));
    if (!p.x) return static_cast<double>(exact_total(p.a));
    const u64 form = exact_bilinear(p.a, *p.x, *p.y);
    return p.form == "quadratic" ? static_cast<double>(form) / 2.0
                                 : static_cast<double>(form);
}

double env_scale(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    double d = std::strtod(v, &end);
    if (end == v || *end != '\0' || !(d > 0))
        throw std::invalid_argument(std::string(name) + " must be a positive number");
    return d;
}

json input_block(const Problem& p, const InputPaths& in) {
    json j{{"n", p.a.n},
           {"rho", p.a.rho},
           {"form", p.form},
           {"symmetric", p.symmetric},
           {"weighted", p.x.has_value()}};
    j["source"] = in.graph.empty() ? "matrix" : "graph";
    if (p.x) {
        j["gamma_x"] = p.x->gamma;
        j["gamma_y"] = p.y->gamma;
    }
    return j;
}

json counter_block(const QueryCounter& c) {
    return {{"row", c.row_queries}, {"col", c.col_queries}, {"total", c.total()}};
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(json& out, const Timer& t, const std::string& path) {
    out["schema_version"] = kSchemaVersion;
    out["wall_time_ms"] = t.ms();
    const std::string text = out.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

// collects assert outcomes; exit code 3 when any of them failed
struct AssertReport {
    json block = json::object();
    bool all_pass = true;

    void add(const std::string& name, double observed, double limit, bool pass) {
        block[name] = {{"observed", observed}, {"limit", limit}, {"pass", pass}};
        all_pass &= pass;
    }
};

int finish(json& out, const Timer& t, const std::string& json_path, const AssertReport& rep) {
    if (!rep.block.empty()) out["asserts"] = rep.block;
    emit(out, t, json_path);
    return rep.all_pass ? 0 : 3;
}

// ---- estimate ----

int cmd_estimate(const InputPaths& in, double eps, u64 seed, u64 trials, bool no_fallback,
                 bool verify, const AssertFlags& af, const std::string& json_path) {
    Timer timer;
    Problem p = load_problem(in);
    PrefixOracle base = PrefixOracle::preprocess(p.a);

    BfeConfig cfg;
    cfg.c_k = env_scale("IPQ_CK", 1.0);
    cfg.allow_exact_fallback = !no_fallback;

    json out{{"command", "estimate"}, {"epsilon", eps}, {"seed", seed}};
    out["input"] = input_block(p, in);

    json jtrials = json::array();
    double sum = 0;
    u64 max_queries = 0;
    std::vector<double> estimates;
    for (u64 t = 0; t < trials; ++t) {
        Rng rng(seed ^ t);
        auto o = base.session();
        Estimate est = p.x ? bfe_general(o, *p.x, *p.y, eps, rng, cfg) : bfe(o, eps, rng, cfg);
        const double reported = p.form == "quadratic" ? est.value / 2.0 : est.value;
        estimates.push_back(reported);
        sum += reported;
        max_queries = std::max(max_queries, est.queries.total());
        jtrials.push_back({{"seed", seed ^ t},
                           {"estimate", reported},
                           {"exact_scan", est.exact},
                           {"queries", counter_block(est.queries)},
                           {"lower_bound_used", est.lower_bound_used},
                           {"phases", est.phases},
                           {"sample_count", est.sample_count},
                           {"bucket_count", est.bucket_count}});
    }
    out["trials"] = std::move(jtrials);
    out["mean_estimate"] = sum / static_cast<double>(trials);
    out["max_queries"] = max_queries;

    AssertReport rep;
    if (verify || af.rel_err || af.interval_rate) {
        const double exact = exact_of(p);
        out["exact"] = exact;
        double worst_rel = 0;
        u64 inside = 0;
        for (double e : estimates) {
            const double rel = exact == 0.0 ? (e == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                                            : std::abs(e - exact) / exact;
            worst_rel = std::max(worst_rel, rel);
            inside += e >= (1.0 - eps) * exact && e <= (1.0 + eps) * exact;
        }
        const double rate = static_cast<double>(inside) / static_cast<double>(trials);
        out["worst_rel_err"] = worst_rel;
        out["interval_rate"] = rate;
        if (af.rel_err) rep.add("rel_err", worst_rel, *af.rel_err, worst_rel <= *af.rel_err);
        if (af.interval_rate)
            rep.add("interval_rate", rate, *af.interval_rate, rate >= *af.interval_rate);
    }
    if (af.budget)
        rep.add("budget", static_cast<double>(max_queries), static_cast<double>(*af.budget),
                max_queries <= *af.budget);
    return finish(out, timer, json_path, rep);
}

// ---- sample ----

int cmd_sample(const InputPaths& in, double eps, u64 seed, u64 samples, bool no_fallback,
               bool verify, bool emit_draws, const AssertFlags& af, const std::string& json_path) {
    Timer timer;
    Problem p = load_problem(in);
    PrefixOracle base = PrefixOracle::preprocess(p.a);

    SauOptions opt;
    opt.c_gamma = env_scale("IPQ_CGAMMA", 4.0);
    opt.bfe.c_k = env_scale("IPQ_CK", 1.0);
    opt.bfe.allow_exact_fallback = !no_fallback;

    json out{{"command", "sample"}, {"epsilon", eps}, {"seed", seed}, {"samples", samples}};
    out["input"] = input_block(p, in);

    Rng rng(seed);
    std::map<std::pair<std::size_t, std::size_t>, u64> counts;
    json jdraws = json::array();
    u64 landed = 0, exhausted = 0;
    const u64 run_cap = samples * 50 + 1000;

    auto record = [&](const EntrySample& e) {
        ++counts[{e.row, e.col}];
        ++landed;
        if (emit_draws) jdraws.push_back({{"row", e.row}, {"col", e.col}, {"value", e.value}});
    };

    SauPlan plan;
    if (!p.x) {
        plan = sau_plan(base, eps, rng, opt);
        for (u64 runs = 0; landed < samples && runs < run_cap; ++runs) {
            auto got = sau_attempts(base, plan, rng);
            if (got) record(*got);
            else ++exhausted;
        }
    } else {
        GeneralEntrySampler gs(base, *p.x, *p.y, eps, rng, opt);
        plan = gs.plan();
        for (u64 runs = 0; landed < samples && runs < run_cap; ++runs) {
            auto got = gs.draw(rng);
            if (got) record(*got);
            else ++exhausted;
        }
    }

    out["plan"] = {{"tau", {{"num", plan.tau.num}, {"den", plan.tau.den}}},
                   {"m_hat", plan.m_hat},
                   {"attempt_budget", plan.attempt_budget},
                   {"scale_exact_scan", plan.scale.exact}};
    out["landed"] = landed;
    out["exhausted_runs"] = exhausted;
    out["incomplete"] = landed < samples;
    out["queries"] = counter_block(base.read_counter());

    json jcounts = json::array();
    for (const auto& [e, c] : counts)
        jcounts.push_back({{"row", e.first},
                           {"col", e.second},
                           {"value", p.a.at(e.first, e.second)},
                           {"count", c}});
    out["counts"] = std::move(jcounts);
    if (emit_draws) out["draws"] = std::move(jdraws);

    AssertReport rep;
    if (verify || af.tv) {
        if (p.a.n > kVerifyLimit)
            throw std::invalid_argument("brute-force verification refused for n > " +
                                        std::to_string(kVerifyLimit));
        // target law: weight of (i,j) over the total weight
        u64 total = 0;
        for (std::size_t i = 0; i < p.a.n; ++i)
            for (std::size_t j = 0; j < p.a.n; ++j) {
                const u64 w = p.x ? p.x->w[i] * p.a.at(i, j) * p.y->w[j] : p.a.at(i, j);
                total += w;
            }
        double acc = 0;
        for (std::size_t i = 0; i < p.a.n; ++i)
            for (std::size_t j = 0; j < p.a.n; ++j) {
                const u64 w = p.x ? p.x->w[i] * p.a.at(i, j) * p.y->w[j] : p.a.at(i, j);
                auto it = counts.find({i, j});
                const double freq =
                    it == counts.end() ? 0.0
                                       : static_cast<double>(it->second) / static_cast<double>(landed);
                acc += std::abs(freq - static_cast<double>(w) / static_cast<double>(total));
            }
        const double tv = acc / 2.0;
        out["tv"] = tv;
        out["weight_total"] = total;
        if (af.tv) rep.add("tv", tv, *af.tv, tv <= *af.tv);
    }
    if (af.budget) {
        const u64 q = base.read_counter().total();
        rep.add("budget", static_cast<double>(q), static_cast<double>(*af.budget),
                q <= *af.budget);
    }
    if (landed < samples) rep.all_pass = false;
    return finish(out, timer, json_path, rep);
}

// ---- regr-test ----

int cmd_regr_test(const std::string& matrix_path, u64 row, std::optional<u64> lo,
                  std::optional<u64> hi, u64 draws, u64 seed, const AssertFlags& af,
                  const std::string& json_path) {
    Timer timer;
    Matrix a = load_matrix_file(matrix_path);
    if (row >= a.n) throw std::invalid_argument("row out of range");
    BitRange r{static_cast<std::size_t>(lo.value_or(0)),
               static_cast<std::size_t>(hi.value_or(a.n))};
    if (r.empty() || r.hi > a.n) throw std::invalid_argument("bad --lo/--hi range");

    json out{{"command", "regr-test"},
             {"row", row},
             {"range", {{"lo", r.lo}, {"hi", r.hi}}},
             {"draws", draws},
             {"seed", seed}};

    u64 mass = 0;
    for (std::size_t j = r.lo; j < r.hi; ++j) mass += a.at(row, j);
    if (mass == 0) {
        out["zero_mass"] = true;
        AssertReport rep;
        return finish(out, timer, json_path, rep);
    }
    out["zero_mass"] = false;

    PrefixOracle o = PrefixOracle::preprocess(a);
    Rng rng(seed);
    std::map<std::size_t, u64> counts;
    u64 max_queries = 0;
    for (u64 s = 0; s < draws; ++s) {
        const auto before = o.read_counter();
        EntrySample e = regr(o, row, r, rng);
        max_queries = std::max(max_queries, (o.read_counter() - before).total());
        ++counts[e.col];
    }

    double acc = 0;
    json jcounts = json::array();
    for (std::size_t j = r.lo; j < r.hi; ++j) {
        const double law = static_cast<double>(a.at(row, j)) / static_cast<double>(mass);
        auto it = counts.find(j);
        const u64 c = it == counts.end() ? 0 : it->second;
        acc += std::abs(static_cast<double>(c) / static_cast<double>(draws) - law);
        if (c != 0 || law != 0.0)
            jcounts.push_back({{"col", j}, {"value", a.at(row, j)}, {"count", c}, {"law", law}});
    }
    const double tv = acc / 2.0;
    const u64 budget = regr_query_budget(r.len());
    out["counts"] = std::move(jcounts);
    out["tv"] = tv;
    out["max_queries"] = max_queries;
    out["query_budget"] = budget;
    out["within_budget"] = max_queries <= budget;

    AssertReport rep;
    if (af.tv) rep.add("tv", tv, *af.tv, tv <= *af.tv);
    if (af.budget)
        rep.add("budget", static_cast<double>(max_queries), static_cast<double>(*af.budget),
                max_queries <= *af.budget);
    if (max_queries > budget) rep.all_pass = false;
    return finish(out, timer, json_path, rep);
}

// ---- verify ----

int cmd_verify(const InputPaths& in, const std::string& json_path) {
    Timer timer;
    Problem p = load_problem(in);
    json out{{"command", "verify"}};
    out["input"] = input_block(p, in);
    out["exact"] = exact_of(p);
    if (!in.graph.empty()) {
        // both the raw edge sum and the doubled bilinear view, for cross-checks
        out["bilinear_double"] = static_cast<double>(exact_bilinear(p.a, *p.x, *p.y));
    }
    AssertReport rep;
    return finish(out, timer, json_path, rep);
}

// ---- gen ----

int cmd_gen_matrix(const Matrix& m, const std::string& out_path, bool sparse, json meta,
                   const Timer& timer, const std::string& json_path) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << (sparse ? serialize_sparse(m) : serialize_dense(m));
    meta["out"] = out_path;
    meta["total_mass"] = exact_total(m);
    emit(meta, timer, json_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sublinear estimation and sampling over inner-product query oracles"};
    app.require_subcommand(1);

    // shared flag storage
    InputPaths in;
    AssertFlags af;
    double eps = 0.25;
    u64 seed = 1, trials = 1, samples = 100, draws = 10000;
    bool no_fallback = false, verify = false, emit_draws = false;
    std::string json_path, out_path;

    auto add_assert_opts = [&](CLI::App* cmd, bool est, bool tv) {
        if (est) {
            cmd->add_option("--assert-rel-err", af.rel_err,
                            "fail unless every trial is within this relative error");
            cmd->add_option("--assert-interval-rate", af.interval_rate,
                            "fail unless this fraction of trials lands in (1 +- epsilon) of exact");
        }
        if (tv)
            cmd->add_option("--assert-tv", af.tv,
                            "fail unless total variation against the exact law is at most this");
        cmd->add_option("--assert-budget", af.budget, "fail if any run exceeds this many queries");
    };

    auto* est = app.add_subcommand("estimate",
                                   "estimate total mass, a bilinear form, or a graph quadratic form");
    add_input_options(est, in);
    est->add_option("--epsilon", eps, "accuracy target in (0, 1/2)")->capture_default_str();
    est->add_option("--seed", seed, "RNG seed")->capture_default_str();
    est->add_option("--trials", trials, "independent repetitions (seeds seed^0, seed^1, ...)")
        ->capture_default_str();
    est->add_flag("--no-exact-fallback", no_fallback,
                  "forbid the full-scan shortcut even when it is cheaper");
    est->add_flag("--verify", verify, "also compute the exact value by brute force");
    est->add_option("--json-out", json_path, "write the JSON report here instead of stdout");
    add_assert_opts(est, true, false);

    auto* smp = app.add_subcommand("sample", "draw entries with probability proportional to value");
    add_input_options(smp, in);
    smp->add_option("--epsilon", eps, "uniformity slack in (0, 1)")->capture_default_str();
    smp->add_option("--seed", seed, "RNG seed")->capture_default_str();
    smp->add_option("--samples", samples, "number of successful draws to collect")
        ->capture_default_str();
    smp->add_flag("--no-exact-fallback", no_fallback,
                  "forbid the full-scan shortcut inside the scale estimate");
    smp->add_flag("--verify", verify, "also compare frequencies against the exact law");
    smp->add_flag("--emit-draws", emit_draws, "include every single draw in the report");
    smp->add_option("--json-out", json_path, "write the JSON report here instead of stdout");
    add_assert_opts(smp, false, true);

    auto* rt = app.add_subcommand("regr-test", "exercise the row descent sampler on one range");
    u64 row = 0;
    std::optional<u64> lo, hi;
    rt->add_option("--matrix", in.matrix, "matrix file")->required();
    rt->add_option("--row", row, "row to sample within")->required();
    rt->add_option("--lo", lo, "range start (default 0)");
    rt->add_option("--hi", hi, "range end (default n)");
    rt->add_option("--draws", draws, "number of draws")->capture_default_str();
    rt->add_option("--seed", seed, "RNG seed")->capture_default_str();
    rt->add_option("--json-out", json_path, "write the JSON report here instead of stdout");
    add_assert_opts(rt, false, true);

    auto* ver = app.add_subcommand("verify", "brute-force exact values, no oracle involved");
    add_input_options(ver, in);
    ver->add_option("--json-out", json_path, "write the JSON report here instead of stdout");

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    std::size_t n = 64;
    u64 rho = 1, mass = 0;
    double density = 0.1;
    bool sparse = false;
    std::string family = "one-heavy-block", graph_out, weights_out;

    auto* g_rand = gen->add_subcommand("random", "symmetric matrix with i.i.d. entries");
    g_rand->add_option("--n", n, "dimension")->required();
    g_rand->add_option("--rho", rho, "entry bound")->required();
    g_rand->add_option("--density", density, "probability an entry pair is nonzero")
        ->capture_default_str();
    g_rand->add_option("--seed", seed, "RNG seed")->capture_default_str();
    g_rand->add_option("--out", out_path, "matrix file to write")->required();
    g_rand->add_flag("--sparse", sparse, "write sparse format");
    g_rand->add_option("--json-out", json_path, "write the JSON report here instead of stdout");

    auto* g_plant = gen->add_subcommand("planted", "all-rho block of exactly the requested mass");
    g_plant->add_option("--n", n, "dimension")->required();
    g_plant->add_option("--rho", rho, "entry bound")->required();
    g_plant->add_option("--mass", mass, "total mass, must be rho times a perfect square")
        ->required();
    g_plant->add_option("--seed", seed, "RNG seed")->capture_default_str();
    g_plant->add_option("--out", out_path, "matrix file to write")->required();
    g_plant->add_flag("--sparse", sparse, "write sparse format");
    g_plant->add_option("--json-out", json_path, "write the JSON report here instead of stdout");

    auto* g_zero = gen->add_subcommand("zero", "all-zero matrix");
    g_zero->add_option("--n", n, "dimension")->required();
    g_zero->add_option("--out", out_path, "matrix file to write")->required();
    g_zero->add_flag("--sparse", sparse, "write sparse format");
    g_zero->add_option("--json-out", json_path, "write the JSON report here instead of stdout");

    auto* g_fam = gen->add_subcommand(
        "graph-family", "three bipartite blocks whose weighted mass separates two families");
    g_fam->add_option("--n", n, "vertex count: even perfect square above 36")->required();
    g_fam->add_option("--rho", rho, "heavy vertex weight")->required();
    g_fam->add_option("--family", family, "one-heavy-block or two-heavy-blocks")
        ->capture_default_str();
    g_fam->add_option("--seed", seed, "RNG seed")->capture_default_str();
    g_fam->add_option("--graph-out", graph_out, "edge list file to write")->required();
    g_fam->add_option("--weights-out", weights_out, "vertex weight file to write")->required();
    g_fam->add_option("--json-out", json_path, "write the JSON report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (est->parsed())
            return cmd_estimate(in, eps, seed, std::max<u64>(trials, 1), no_fallback, verify, af,
                                json_path);
        if (smp->parsed())
            return cmd_sample(in, eps, seed, samples, no_fallback, verify, emit_draws, af,
                              json_path);
        if (rt->parsed())
            return cmd_regr_test(in.matrix, row, lo, hi, draws, seed, af, json_path);
        if (ver->parsed()) return cmd_verify(in, json_path);

        Timer timer;
        if (g_rand->parsed()) {
            json meta{{"command", "gen"}, {"kind", "random"}, {"n", n}, {"rho", rho},
                      {"density", density}, {"seed", seed}};
            return cmd_gen_matrix(gen_random_symmetric(n, rho, density, seed), out_path, sparse,
                                  std::move(meta), timer, json_path);
        }
        if (g_plant->parsed()) {
            json meta{{"command", "gen"}, {"kind", "planted"}, {"n", n}, {"rho", rho},
                      {"mass", mass}, {"seed", seed}};
            return cmd_gen_matrix(gen_planted(n, rho, mass, seed), out_path, sparse,
                                  std::move(meta), timer, json_path);
        }
        if (g_zero->parsed()) {
            json meta{{"command", "gen"}, {"kind", "zero"}, {"n", n}};
            return cmd_gen_matrix(gen_zero(n), out_path, sparse, std::move(meta), timer,
                                  json_path);
        }
        if (g_fam->parsed()) {
            GraphFamily fam;
            if (family == "one-heavy-block") fam = GraphFamily::one_heavy_block;
            else if (family == "two-heavy-blocks") fam = GraphFamily::two_heavy_blocks;
            else throw std::invalid_argument("--family must be one-heavy-block or two-heavy-blocks");
            GraphInstance g = gen_graph_family(n, rho, fam, seed);
            std::ofstream gf(graph_out);
            if (!gf) throw std::runtime_error("cannot write " + graph_out);
            gf << serialize_graph(g);
            u64 gamma = 1;
            for (u64 w : g.weight) gamma = std::max(gamma, w);
            WeightVector f(g.n, gamma);
            for (std::size_t i = 0; i < g.n; ++i) f.set(i, g.weight[i]);
            std::ofstream wf(weights_out);
            if (!wf) throw std::runtime_error("cannot write " + weights_out);
            wf << serialize_weights(f);
            json meta{{"command", "gen"},     {"kind", "graph-family"},
                      {"family", family},     {"n", n},
                      {"rho", rho},           {"seed", seed},
                      {"edges", g.edges.size()}, {"graph_out", graph_out},
                      {"weights_out", weights_out}, {"exact_quadratic", exact_edge_weight_sum(g)}};
            emit(meta, timer, json_path);
            return 0;
        }
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    return 0;
}
