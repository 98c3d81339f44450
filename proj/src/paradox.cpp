#include "logparadox/paradox.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logparadox/finite_diff.hpp"
#include "logparadox/random.hpp"

namespace logparadox {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double snap(double d) { return sign_with_tolerance(d) == 0 ? 0.0 : d; }

// Ordering of A relative to B given d = mu(B) - mu(A).
Ordering order_from_delta(double d) {
    if (d == 0.0) return Ordering::Equal;
    return d < 0.0 ? Ordering::Greater : Ordering::Less;
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(ErrorCode::NonPositiveInput,
                    std::string(what) + " must be finite and > 0", std::nullopt, v);
    }
}

SampleVector rebuild(const SampleVector& x, const std::vector<std::size_t>& drop,
                     const std::vector<double>& add) {
    std::vector<double> out;
    out.reserve(x.size() - drop.size() + add.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(x[i]);
    }
    out.insert(out.end(), add.begin(), add.end());
    return SampleVector::validate(std::move(out));
}

} // namespace

const char* to_string(Ordering o) noexcept {
    switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
    }
    return "equal";
}

ParadoxVerdict paradox_verdict(const SampleVector& a, const SampleVector& b) {
    ParadoxVerdict v;
    v.d_a = snap(arith_mean(b) - arith_mean(a));
    v.d_g = snap(geom_mean(b) - geom_mean(a));
    v.arith_order = order_from_delta(v.d_a);
    v.geom_order = order_from_delta(v.d_g);
    v.is_paradox = (v.arith_order == Ordering::Greater && v.geom_order == Ordering::Less) ||
                   (v.arith_order == Ordering::Less && v.geom_order == Ordering::Greater);
    v.criterion = -v.d_a * v.d_g;
    return v;
}

double optimal_target(const SampleVector& x) {
    const double am = arith_mean(x);
    const double gm = geom_mean(x);
    if (am == gm) return am;
    return std::clamp(0.5 * (gm + am), gm, am);
}

ReplacementTargets optimal_replacement_targets(const SampleVector& x, std::size_t replace_count) {
    if (replace_count == 0 || replace_count > x.size()) {
        throw Error(ErrorCode::InvalidParams, "replacement count must be in [1, |X|]");
    }
    const double n = static_cast<double>(x.size());
    const double m = static_cast<double>(replace_count);
    const double am = arith_mean(x);
    const double gm = geom_mean(x);
    return {n * (gm - am) / (2.0 * m), std::pow(am / (2.0 * gm) + 0.5, n / m)};
}

bool heuristic_precondition(double m, double big_m, double q) noexcept {
    return std::sqrt(m * big_m) < q && q < 0.5 * (m + big_m);
}

std::pair<SampleVector, HeuristicStep> insert_step(const SampleVector& x) {
    HeuristicStep step;
    step.q = optimal_target(x);
    step.min = x.min();
    step.max = x.max();
    step.inserted = {step.q};
    step.precondition_holds = heuristic_precondition(step.min, step.max, step.q);
    return {rebuild(x, {}, step.inserted), std::move(step)};
}

std::pair<SampleVector, HeuristicStep> replace_step(const SampleVector& x,
                                                    const ReplaceSelector& sel) {
    HeuristicStep step;
    step.q = optimal_target(x);
    step.min = x.min();
    step.max = x.max();
    step.precondition_holds = heuristic_precondition(step.min, step.max, step.q);

    const auto values = x.values();
    // First occurrence of the minimum, last occurrence of the maximum: distinct
    // indices whenever |X| >= 2, even for constant vectors.
    const auto first_min = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    const auto last_max = static_cast<std::size_t>(
        values.size() - 1 -
        static_cast<std::size_t>(std::max_element(values.rbegin(), values.rend()) - values.rbegin()));

    std::vector<std::size_t> drop;
    std::visit(overloaded{
                   [&](const selector::Random& r) {
                       RandomStream rng(r.seed);
                       drop = {rng.index(x.size())};
                       const double gm = geom_mean(x);
                       const double am = arith_mean(x);
                       step.inserted = {am > gm ? rng.uniform(gm, am) : am};
                   },
                   [&](const selector::Min&) {
                       drop = {first_min};
                       step.inserted = {step.q};
                   },
                   [&](const selector::Max&) {
                       drop = {last_max};
                       step.inserted = {step.q};
                   },
                   [&](const selector::MinMax&) {
                       if (x.size() < 3) {
                           throw Error(ErrorCode::VectorTooSmall,
                                       "min/max replacement needs at least 3 elements, got " +
                                           std::to_string(x.size()));
                       }
                       drop = {first_min, last_max};
                       step.inserted = {step.q, step.q};
                   },
               },
               sel);
    for (std::size_t i : drop) step.removed.push_back(x[i]);
    return {rebuild(x, drop, step.inserted), std::move(step)};
}

double d_score(double m, double big_m) {
    require_positive(m, "m");
    require_positive(big_m, "M");
    const double product = m * big_m;
    const double root = std::isfinite(product) ? std::sqrt(product) : std::sqrt(m) * std::sqrt(big_m);
    return 0.5 * (m + big_m) - root;
}

std::vector<GradientPoint> gradient_product_sweep(const SampleVector& x,
                                                  const std::vector<double>& candidates) {
    std::vector<GradientPoint> out;
    out.reserve(candidates.size());
    for (double c : candidates) {
        require_positive(c, "candidate");
        const Perturbation p = Concat{SampleVector::validate({c})};
        GradientPoint g;
        g.candidate = c;
        g.d_arith = diff_arith(x, p);
        g.d_geom = diff_geom(x, p);
        g.product = g.d_arith * g.d_geom;
        out.push_back(g);
    }
    return out;
}

std::vector<double> default_candidate_grid(const SampleVector& x, std::size_t points) {
    if (points < 2) {
        throw Error(ErrorCode::InvalidParams, "candidate grid needs at least 2 points");
    }
    const double lo = std::log(x.min() / 10.0);
    const double hi = std::log(x.max() * 10.0);
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    return grid;
}

std::vector<std::vector<double>> d_surface(const std::vector<double>& m_grid,
                                           const std::vector<double>& big_m_grid) {
    std::vector<std::vector<double>> out;
    out.reserve(m_grid.size());
    for (double m : m_grid) {
        std::vector<double> row;
        row.reserve(big_m_grid.size());
        for (double big_m : big_m_grid) row.push_back(d_score(m, big_m));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace logparadox
