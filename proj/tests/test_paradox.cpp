#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "logparadox/finite_diff.hpp"
#include "logparadox/generators.hpp"
#include "logparadox/paradox.hpp"
#include "oracles.hpp"

using namespace logparadox;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

SampleVector V(std::initializer_list<double> v) { return SampleVector::validate(v); }

const SampleVector kX = V({2, 4, 6, 13});

double id_of(const SampleVector& x) { return arith_mean(x) - geom_mean(x); }

} // namespace

TEST_CASE("paradox verdict", "[paradox]") {
    const auto v = paradox_verdict(kX, V({4, 6, 3, 11}));
    CHECK(v.is_paradox);
    CHECK(v.arith_order == Ordering::Greater);
    CHECK(v.geom_order == Ordering::Less);
    CHECK(v.criterion > 0.0);
    CHECK_THAT(v.d_a, WithinAbs(-0.25, 1e-12));

    const auto same = paradox_verdict(kX, kX);
    CHECK_FALSE(same.is_paradox);
    CHECK(same.arith_order == Ordering::Equal);
    CHECK(same.geom_order == Ordering::Equal);

    const auto agree = paradox_verdict(V({10, 10}), V({1, 1}));
    CHECK_FALSE(agree.is_paradox);
    CHECK(agree.arith_order == Ordering::Greater);
    CHECK(agree.geom_order == Ordering::Greater);
}

TEST_CASE("paradox verdict antisymmetry", "[paradox][property]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = SampleVector::validate(oracle::log_uniform(rng, 2 + trial % 9, 0.1, 100));
        const auto b = SampleVector::validate(oracle::log_uniform(rng, 2 + trial % 7, 0.1, 100));
        const auto ab = paradox_verdict(a, b);
        const auto ba = paradox_verdict(b, a);
        CHECK(ab.is_paradox == ba.is_paradox);
        CHECK(ab.d_a == -ba.d_a);
        auto flip = [](Ordering o) {
            return o == Ordering::Less ? Ordering::Greater : o == Ordering::Greater ? Ordering::Less : o;
        };
        CHECK(ab.arith_order == flip(ba.arith_order));
        CHECK(ab.geom_order == flip(ba.geom_order));
        if (ab.criterion > 0) CHECK(ab.is_paradox);
    }
}

TEST_CASE("optimal target", "[paradox]") {
    CHECK_THAT(optimal_target(kX), WithinAbs(5.624, 0.0005));
    CHECK(optimal_target(V({4.5, 4.5, 4.5})) == 4.5);
    CHECK_THAT(optimal_target(V({1, 100})), WithinRel(30.25, 1e-14));
}

TEST_CASE("Q-optimality of the constant replacement", "[paradox]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = gen_exponential(5 + trial, rng());
        const double q = optimal_target(x);
        const double id = id_of(x);
        for (std::size_t len : {std::size_t{1}, std::size_t{7}, x.size()}) {
            const auto xq = SampleVector::validate(std::vector<double>(len, q));
            const auto v = paradox_verdict(x, xq);
            CHECK_THAT(v.d_a, WithinRel(-id / 2, 1e-10));
            CHECK_THAT(v.d_g, WithinRel(id / 2, 1e-10));
            CHECK_THAT(v.criterion, WithinRel(id * id / 4, 1e-9));
            // Any other constant inside the inter-mean interval does worse.
            for (double t : {0.1, 0.3, 0.7, 0.95}) {
                const double other = geom_mean(x) + t * id;
                const auto w = paradox_verdict(x, SampleVector::validate(std::vector<double>(len, other)));
                CHECK(w.criterion < v.criterion);
            }
        }
    }
}

TEST_CASE("single insert is close to but not exactly Q", "[paradox]") {
    const auto x = V({std::numbers::e, std::exp(3.0)});
    const double lo = geom_mean(x);
    const double hi = arith_mean(x);
    const double q = optimal_target(x);
    const double id = hi - lo;
    constexpr std::size_t kPoints = 100000;
    std::vector<double> grid;
    for (std::size_t i = 1; i < kPoints; ++i) {
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / kPoints);
    }
    const auto sweep = gradient_product_sweep(x, grid);
    auto best = sweep.front();
    for (const auto& g : sweep) {
        if (-g.product > -best.product) best = g;
    }
    const double resolution = (hi - lo) / kPoints;
    CHECK(std::abs(best.candidate - q) > resolution);
    const double ratio = -best.product / (id * id / 4);
    CHECK(ratio >= 0.100);
    CHECK(ratio <= 0.105);
}

TEST_CASE("gradient product sweep", "[paradox]") {
    const auto x = V({std::numbers::e, std::exp(3.0)});
    const double lo = geom_mean(x);
    const double hi = arith_mean(x);
    CHECK_THAT(lo, WithinRel(std::exp(2.0), 1e-14));
    const auto grid = default_candidate_grid(x);
    REQUIRE(grid.size() == 400);
    CHECK_THAT(grid.front(), WithinRel(x.min() / 10, 1e-12));
    CHECK_THAT(grid.back(), WithinRel(x.max() * 10, 1e-12));
    for (const auto& g : gradient_product_sweep(x, grid)) {
        if (g.candidate > lo * (1 + 1e-9) && g.candidate < hi * (1 - 1e-9)) {
            CHECK(g.product < 0);
        } else if (g.candidate < lo * (1 - 1e-9) || g.candidate > hi * (1 + 1e-9)) {
            CHECK(g.product > 0);
        }
    }
    const auto at_lo = gradient_product_sweep(x, {lo}).front();
    CHECK_THAT(at_lo.d_geom, WithinAbs(0.0, 1e-14));
    CHECK_THAT(at_lo.product, WithinAbs(0.0, 1e-13));
    const auto at_hi = gradient_product_sweep(x, {hi}).front();
    CHECK(at_hi.d_arith == 0.0);
    CHECK(at_hi.product == 0.0);
}

TEST_CASE("insert step", "[paradox]") {
    const auto [x1, step] = insert_step(kX);
    REQUIRE(x1.size() == 5);
    CHECK(x1[4] == step.q);
    CHECK_THAT(step.q, WithinAbs(5.624, 0.0005));
    CHECK(id_of(x1) < id_of(kX));
    CHECK(arith_mean(x1) < arith_mean(kX));
    CHECK(geom_mean(x1) > geom_mean(kX));

    const auto [c1, cs] = insert_step(V({3, 3}));
    CHECK(cs.q == 3.0);
    CHECK(arith_mean(c1) == 3.0);
    CHECK(geom_mean(c1) == 3.0);
}

TEST_CASE("iterated insert decreases ID monotonically", "[paradox]") {
    auto x = gen_exponential(2000, 5);
    double id = id_of(x);
    for (int i = 0; i < 100 && id > 1e-9; ++i) {
        x = insert_step(x).first;
        const double next = id_of(x);
        CHECK(next < id);
        id = next;
    }
}

TEST_CASE("replace step MinMax", "[paradox]") {
    const auto [x1, step] = replace_step(kX, selector::MinMax{});
    REQUIRE(x1.size() == 4);
    CHECK(oracle::same_multiset(step.removed, {2, 13}));
    REQUIRE(step.inserted.size() == 2);
    CHECK(step.inserted[0] == step.q);
    CHECK(step.inserted[1] == step.q);
    CHECK(step.min == 2);
    CHECK(step.max == 13);
    CHECK(step.precondition_holds);
    CHECK(oracle::same_multiset({x1.begin(), x1.end()}, {4, 6, step.q, step.q}));

    const auto [c1, cs] = replace_step(V({5, 5, 5}), selector::MinMax{});
    CHECK_FALSE(cs.precondition_holds);
    CHECK(c1.size() == 3);

    const auto [d1, ds] = replace_step(V({1, 1, 9, 9}), selector::MinMax{});
    CHECK(oracle::same_multiset({d1.begin(), d1.end()}, {1, 9, ds.q, ds.q}));

    CHECK_THROWS_AS(replace_step(V({1, 2}), selector::MinMax{}), Error);
}

TEST_CASE("replace step Min, Max and Random", "[paradox]") {
    const auto [mn, ms] = replace_step(kX, selector::Min{});
    CHECK(oracle::same_multiset({mn.begin(), mn.end()}, {4, 6, 13, ms.q}));
    const auto [mx, xs] = replace_step(kX, selector::Max{});
    CHECK(oracle::same_multiset({mx.begin(), mx.end()}, {2, 4, 6, xs.q}));

    const auto [r1, rs1] = replace_step(kX, selector::Random{42});
    const auto [r2, rs2] = replace_step(kX, selector::Random{42});
    CHECK(r1 == r2);
    REQUIRE(rs1.inserted.size() == 1);
    CHECK(rs1.inserted[0] >= geom_mean(kX));
    CHECK(rs1.inserted[0] <= arith_mean(kX));
    CHECK(r1.size() == kX.size());
}

TEST_CASE("MinMax precondition predicts paradox", "[paradox][property]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = gen_exponential(3 + trial % 50, rng());
        const auto [x1, step] = replace_step(x, selector::MinMax{});
        const auto d = closed_form_diff(
            x, Replace{SampleVector::validate(step.inserted), SampleVector::validate(step.removed)});
        CHECK(d.paradox_signed == step.precondition_holds);
    }
}

TEST_CASE("replacement targets at the optimum", "[paradox]") {
    // X = [m, c, c, M] with c chosen so that Q(X) = c: the MinMax step then
    // lands exactly on the constant vector [Q]*4, the unconstrained optimum.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ends = SampleVector::validate(oracle::log_uniform(rng, 2, 0.5, 500));
        const double m = ends.min();
        const double big_m = ends.max();
        if (big_m / m < 1.01) continue;
        auto gap = [&](double c) { return optimal_target(SampleVector::validate({m, c, c, big_m})) - c; };
        double lo = m, hi = big_m;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (gap(mid) > 0 ? lo : hi) = mid;
        }
        const double c = 0.5 * (lo + hi);
        const auto x = SampleVector::validate({m, c, c, big_m});
        const auto [x1, step] = replace_step(x, selector::MinMax{});
        const auto y = SampleVector::validate(step.inserted);
        const auto z = SampleVector::validate(step.removed);
        const auto targets = optimal_replacement_targets(x, 2);
        CHECK_THAT(arith_mean(y) - arith_mean(z), WithinRel(targets.arith_gap, 1e-9));
        CHECK_THAT(geom_mean(y) / geom_mean(z), WithinRel(targets.geom_ratio, 1e-9));
        const auto d = closed_form_diff(x, Replace{y, z});
        CHECK_THAT(d.d_arith, WithinRel(-id_of(x) / 2, 1e-9));
        CHECK_THAT(d.d_geom, WithinRel(id_of(x) / 2, 1e-9));
    }
    const auto t = optimal_replacement_targets(kX, 2);
    CHECK_THAT(t.arith_gap, WithinRel(geom_mean(kX) - 6.25, 1e-12));
    CHECK_THAT(t.geom_ratio, WithinRel(std::pow(6.25 / (2 * geom_mean(kX)) + 0.5, 2.0), 1e-12));
}

TEST_CASE("d score", "[paradox]") {
    CHECK_THAT(d_score(2, 13), WithinAbs(7.5 - std::sqrt(26.0), 1e-14));
    CHECK_THAT(d_score(2, 13), WithinAbs(2.401, 0.0005));
    CHECK(d_score(4, 4) == 0.0);
    CHECK_THAT(d_score(1, 100), WithinRel(40.5, 1e-14));
    CHECK(d_score(1, 100) > d_score(1, 10));
    CHECK(d_score(13, 2) == d_score(2, 13));
    CHECK_THROWS_AS(d_score(0, 3), Error);
    CHECK_THROWS_AS(d_score(1, -3), Error);
    CHECK(heuristic_precondition(2, 13, 5.624));
    CHECK_FALSE(heuristic_precondition(2, 13, 5.0));
    CHECK_FALSE(heuristic_precondition(2, 13, 7.5));
}

TEST_CASE("d surface", "[paradox]") {
    const std::vector<double> grid{1, 2, 5, 13, 40};
    const auto s = d_surface(grid, grid);
    REQUIRE(s.size() == 5);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(s[i][i] == 0.0);
        for (std::size_t j = i + 1; j < grid.size(); ++j) CHECK(s[i][j] > s[i][j - 1]);
    }
    CHECK_THAT(s[1][3], WithinAbs(2.401, 0.0005));
    CHECK(d_surface({3}, {7}).size() == 1);
    CHECK_THROWS_AS(d_surface({0.0}, {1.0}), Error);
}
