#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "logparadox/generators.hpp"
#include "logparadox/resampling.hpp"
#include "oracles.hpp"

using namespace logparadox;

namespace {

double variance(const std::vector<double>& v) {
    const double m = oracle::arith(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

} // namespace

TEST_CASE("bootstrap of a constant vector", "[resampling]") {
    const auto c = SampleVector::validate(std::vector<double>(17, 2.5));
    for (auto stat : {Statistic::ArithMean, Statistic::GeomMean}) {
        const auto b = bootstrap(c, {10, 30, stat, 4});
        REQUIRE(b.size() == 30);
        for (double v : b) CHECK(v == 2.5);
    }
}

TEST_CASE("bootstrap is deterministic and shares resamples across statistics", "[resampling]") {
    const auto x = gen_exponential(300, 1);
    const auto a = bootstrap(x, {50, 50, Statistic::GeomMean, 9});
    CHECK(a == bootstrap(x, {50, 50, Statistic::GeomMean, 9}));
    CHECK(a != bootstrap(x, {50, 50, Statistic::GeomMean, 10}));
    const auto arith = bootstrap(x, {50, 50, Statistic::ArithMean, 9});
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] <= arith[i]);
}

TEST_CASE("bootstrap mean centers on the sample mean", "[resampling]") {
    std::vector<double> v(100);
    std::iota(v.begin(), v.end(), 1.0);
    const auto x = SampleVector::validate(v);
    const auto b = bootstrap(x, {50, 50, Statistic::ArithMean, 321});
    const double pop_var = variance(v) * 99.0 / 100.0;
    const double se = std::sqrt(pop_var / 50.0 / 50.0);
    CHECK(std::abs(oracle::arith(b) - 50.5) < 3 * se);
}

TEST_CASE("bootstrap variance shrinks with sample size", "[resampling]") {
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto x = gen_exponential(2000, seed);
        const double v50 = variance(bootstrap(x, {50, 50, Statistic::ArithMean, seed + 100}));
        const double v200 = variance(bootstrap(x, {200, 50, Statistic::ArithMean, seed + 100}));
        wins += v200 < v50;
    }
    CHECK(wins > 5);
}

TEST_CASE("replace_random keeps length and positivity", "[resampling]") {
    const auto x = gen_exponential(200, 2);
    RandomStream rng(3);
    const auto y = replace_random(x, 20, 5.0, 6.0, rng);
    REQUIRE(y.size() == x.size());
    std::size_t changed = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(y[i] > 0);
        if (y[i] != x[i]) {
            ++changed;
            CHECK(y[i] >= 5.0);
            CHECK(y[i] <= 6.0);
        }
    }
    CHECK(changed == 20);
    RandomStream again(3);
    CHECK(replace_random(x, 20, 5.0, 6.0, again) == y);
}

TEST_CASE("replacement sweep", "[resampling]") {
    const auto x = gen_exponential(400, 8);
    SweepConfig cfg;
    cfg.sample_size = 50;
    cfg.max_fraction = 0.1;
    cfg.step = 5;
    cfg.seed = 99;
    const auto r = replacement_sweep(x, cfg);
    REQUIRE(r.points.size() == 9);
    CHECK(r.points.front().k == 0);
    CHECK(r.points.back().k == 40);
    CHECK(r.replace_lo == geom_mean(x));
    CHECK(r.replace_hi == arith_mean(x));
    // k = 0 compares A with itself under common resamples.
    CHECK(r.points.front().d_arith == 0.0);
    CHECK(r.points.front().d_geom == 0.0);
    CHECK_FALSE(r.points.front().paradox_direction_ok);
    CHECK(r.points.front().p_geom == 1.0);
    for (const auto& p : r.points) {
        CHECK(p.paradox_direction_ok == (p.d_geom > 0 && p.d_arith < 0));
        CHECK(p.p_geom >= 0.0);
        CHECK(p.p_geom <= 1.0);
    }
    REQUIRE(r.crossings.size() == 3);
    for (const auto& c : r.crossings) {
        if (c.k) {
            bool found = false;
            for (const auto& p : r.points) {
                if (p.k < *c.k) CHECK(p.p_geom >= c.alpha);
                if (p.k == *c.k) {
                    CHECK(p.p_geom < c.alpha);
                    found = true;
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("replacement sweep determinism and point independence", "[resampling]") {
    const auto x = gen_exponential(300, 4);
    SweepConfig cfg;
    cfg.sample_size = 40;
    cfg.n_resamples = 20;
    cfg.max_fraction = 0.05;
    cfg.seed = 12;
    const auto a = replacement_sweep(x, cfg);
    const auto b = replacement_sweep(x, cfg);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].p_geom == b.points[i].p_geom);
        CHECK(a.points[i].d_arith == b.points[i].d_arith);
    }
    // Extending the sweep leaves earlier points untouched.
    cfg.max_fraction = 0.1;
    const auto longer = replacement_sweep(x, cfg);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(longer.points[i].p_geom == a.points[i].p_geom);
        CHECK(longer.points[i].d_geom == a.points[i].d_geom);
    }
}

TEST_CASE("replacement sweep rejects bad fractions", "[resampling]") {
    const auto x = gen_exponential(100, 4);
    for (double f : {0.0, -0.1, 0.51, 1.0}) {
        SweepConfig cfg;
        cfg.max_fraction = f;
        try {
            (void)replacement_sweep(x, cfg);
            FAIL("accepted fraction " << f);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::FractionOutOfRange);
        }
    }
}
