#include "logparadox/mann_whitney.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "logparadox/error.hpp"

namespace logparadox {

namespace {

struct RankSums {
    double rank_sum_a = 0.0;
    double tie_term = 0.0; // sum over tie groups of t^3 - t
    bool has_ties = false;
};

RankSums rank(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size() + b.size();
    std::vector<std::pair<double, bool>> pooled; // (value, from a)
    pooled.reserve(n);
    for (double v : a) pooled.emplace_back(v, true);
    for (double v : b) pooled.emplace_back(v, false);
    std::sort(pooled.begin(), pooled.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    RankSums out;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && pooled[j].first == pooled[i].first) ++j;
        const double t = static_cast<double>(j - i);
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) {
            if (pooled[k].second) out.rank_sum_a += midrank;
        }
        if (j - i > 1) {
            out.has_ties = true;
            out.tie_term += t * t * t - t;
        }
        i = j;
    }
    return out;
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

} // namespace

const char* to_string(Alternative a) noexcept {
    switch (a) {
    case Alternative::TwoSided: return "two-sided";
    case Alternative::Greater: return "greater";
    case Alternative::Less: return "less";
    }
    return "two-sided";
}

const char* to_string(MwuMethod m) noexcept {
    return m == MwuMethod::Exact ? "exact" : "normal-approx";
}

std::vector<std::uint64_t> mwu_exact_counts(std::size_t n1, std::size_t n2) {
    if (n1 + n2 > kExactCountLimit) {
        throw Error(ErrorCode::InvalidParams, "exact Mann-Whitney distribution limited to n1 + n2 <= 60");
    }
    // layer[i][u]: orderings of i "a" elements and j "b" elements in which the
    // a's are preceded by u b's in total. An "a" placed after j b's adds j to U.
    const std::size_t umax = n1 * n2;
    std::vector<std::vector<std::uint64_t>> layer(n1 + 1, std::vector<std::uint64_t>(umax + 1, 0));
    for (std::size_t j = 0; j <= n2; ++j) {
        if (j == 0) layer[0][0] = 1;
        for (std::size_t i = 1; i <= n1; ++i) {
            for (std::size_t u = j; u <= umax; ++u) layer[i][u] += layer[i - 1][u - j];
        }
    }
    return layer[n1];
}

double mwu_exact_p(std::size_t u, std::size_t n1, std::size_t n2, Alternative alternative) {
    const auto counts = mwu_exact_counts(n1, n2);
    u = std::min(u, counts.size() - 1);
    std::uint64_t total = 0;
    std::uint64_t le = 0;
    std::uint64_t ge = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        total += counts[k];
        if (k <= u) le += counts[k];
        if (k >= u) ge += counts[k];
    }
    const double t = static_cast<double>(total);
    switch (alternative) {
    case Alternative::Greater: return static_cast<double>(ge) / t;
    case Alternative::Less: return static_cast<double>(le) / t;
    case Alternative::TwoSided: break;
    }
    return std::min(1.0, static_cast<double>(2 * std::min(le, ge)) / t);
}

MwuResult mwu_test(std::span<const double> a, std::span<const double> b, Alternative alternative,
                   MwuMethodChoice method) {
    if (a.empty() || b.empty()) {
        throw Error(ErrorCode::EmptyVector, "Mann-Whitney U needs two non-empty samples");
    }
    const auto n1 = static_cast<double>(a.size());
    const auto n2 = static_cast<double>(b.size());
    const RankSums r = rank(a, b);

    MwuResult res;
    res.alternative = alternative;
    res.u_statistic = r.rank_sum_a - n1 * (n1 + 1.0) / 2.0;

    bool exact = false;
    switch (method) {
    case MwuMethodChoice::Auto:
        exact = !r.has_ties && a.size() + b.size() <= kExactLimit;
        break;
    case MwuMethodChoice::Exact:
        if (r.has_ties) {
            throw Error(ErrorCode::InvalidParams, "exact Mann-Whitney p-value requires untied data");
        }
        if (a.size() + b.size() > kExactCountLimit) {
            throw Error(ErrorCode::InvalidParams, "exact Mann-Whitney p-value limited to n1 + n2 <= 60");
        }
        exact = true;
        break;
    case MwuMethodChoice::NormalApprox:
        break;
    }

    if (exact) {
        res.method = MwuMethod::Exact;
        res.p_value = mwu_exact_p(static_cast<std::size_t>(std::llround(res.u_statistic)), a.size(),
                                  b.size(), alternative);
        return res;
    }

    res.method = MwuMethod::NormalApprox;
    const double n = n1 + n2;
    const double mu = n1 * n2 / 2.0;
    const double var = n1 * n2 / 12.0 * ((n + 1.0) - r.tie_term / (n * (n - 1.0)));
    if (!(var > 0.0)) {
        res.p_value = 1.0;
        return res;
    }
    const double sigma = std::sqrt(var);
    const double u = res.u_statistic;
    double p = 1.0;
    switch (alternative) {
    case Alternative::TwoSided: p = 2.0 * normal_sf((std::abs(u - mu) - 0.5) / sigma); break;
    case Alternative::Greater: p = normal_sf((u - mu - 0.5) / sigma); break;
    case Alternative::Less: p = normal_sf(-(u - mu + 0.5) / sigma); break;
    }
    res.p_value = std::clamp(p, 0.0, 1.0);
    return res;
}

} // namespace logparadox
