#pragma once

// Test-only reference computations. Deliberately naive: they share no code
// path with the library beyond the SampleVector container.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

inline long double sum(const std::vector<double>& v) {
    long double s = 0.0L;
    for (double x : v) s += x;
    return s;
}

inline double arith(const std::vector<double>& v) {
    return static_cast<double>(sum(v) / static_cast<long double>(v.size()));
}

/// Geometric mean through log-sum in long double.
inline double geom(const std::vector<double>& v) {
    long double s = 0.0L;
    for (double x : v) s += std::log(static_cast<long double>(x));
    return static_cast<double>(std::exp(s / static_cast<long double>(v.size())));
}

/// Geometric mean as the n-th root of the direct product (small, tame inputs only).
inline double geom_product(const std::vector<double>& v) {
    long double p = 1.0L;
    for (double x : v) p *= x;
    return static_cast<double>(std::pow(p, 1.0L / static_cast<long double>(v.size())));
}

/// Geometric mean computed with logs in another base.
inline double geom_in_base(const std::vector<double>& v, double base) {
    double s = 0.0;
    for (double x : v) s += std::log(x) / std::log(base);
    return std::pow(base, s / static_cast<double>(v.size()));
}

inline std::vector<double> concat(std::vector<double> a, const std::vector<double>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Removes one instance of each element of b (exact match, linear scan).
inline std::vector<double> remove(std::vector<double> a, const std::vector<double>& b) {
    for (double y : b) {
        auto it = std::find(a.begin(), a.end(), y);
        if (it == a.end()) throw std::runtime_error("oracle: element not present");
        a.erase(it);
    }
    return a;
}

inline bool same_multiset(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

/// Exact Mann-Whitney distribution by enumerating every rank subset.
struct ExactMwu {
    std::size_t n1, n2;
    std::vector<std::uint64_t> counts; // by U

    ExactMwu(std::size_t a, std::size_t b) : n1(a), n2(b), counts(a * b + 1, 0) {
        const std::size_t n = a + b;
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(a), true);
        do {
            std::size_t rank_sum = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (pick[i]) rank_sum += i + 1;
            }
            ++counts[rank_sum - a * (a + 1) / 2];
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }

    [[nodiscard]] double two_sided(std::size_t u) const {
        std::uint64_t le = 0, ge = 0, total = 0;
        for (std::size_t k = 0; k < counts.size(); ++k) {
            total += counts[k];
            if (k <= u) le += counts[k];
            if (k >= u) ge += counts[k];
        }
        return std::min(1.0, static_cast<double>(2 * std::min(le, ge)) / static_cast<double>(total));
    }
};

/// U of sample a by pair counting (ties count one half).
inline double pair_count_u(const std::vector<double>& a, const std::vector<double>& b) {
    double u = 0.0;
    for (double x : a) {
        for (double y : b) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    }
    return u;
}

/// Log-uniform draws over [lo, hi].
inline std::vector<double> log_uniform(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    std::vector<double> v(n);
    for (double& x : v) x = std::exp(u(rng));
    return v;
}

inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<std::size_t> idx(v.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) { return v[l] < v[r]; });
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < idx.size();) {
            std::size_t j = i;
            while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
            for (std::size_t k = i; k <= j; ++k) r[idx[k]] = 0.5 * static_cast<double>(i + j) + 1.0;
            i = j + 1;
        }
        return r;
    };
    const auto ra = ranks(a);
    const auto rb = ranks(b);
    const double n = static_cast<double>(a.size());
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += ra[i];
        mb += rb[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (ra[i] - ma) * (rb[i] - mb);
        saa += (ra[i] - ma) * (ra[i] - ma);
        sbb += (rb[i] - mb) * (rb[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

} // namespace oracle
