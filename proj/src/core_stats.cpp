#include "logparadox/core_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace logparadox {

namespace {

// Neumaier summation over a sorted copy: permutation-invariant to the bit.
double sorted_compensated_sum(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double sum = 0.0;
    double comp = 0.0;
    for (double x : v) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

SampleVector SampleVector::validate(std::vector<double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyVector, "vector must contain at least one element");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::NonFiniteElement,
                        "element " + std::to_string(i) + " is not finite", i, v);
        }
        if (v <= 0.0) {
            throw Error(ErrorCode::NonPositiveElement,
                        "element " + std::to_string(i) + " is not strictly positive (" +
                            format_value(v) + ")",
                        i, v);
        }
    }
    return SampleVector(std::move(values));
}

double SampleVector::min() const noexcept {
    return *std::min_element(values_.begin(), values_.end());
}

double SampleVector::max() const noexcept {
    return *std::max_element(values_.begin(), values_.end());
}

double arith_mean(std::span<const double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyVector, "mean of an empty vector");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo == *hi) {
        return *lo;
    }
    return std::clamp(sorted_compensated_sum({values.begin(), values.end()}) /
                          static_cast<double>(values.size()),
                      *lo, *hi);
}

double log_mean(std::span<const double> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyVector, "mean of an empty vector");
    }
    if (std::all_of(values.begin(), values.end(), [&](double v) { return v == values[0]; })) {
        return std::log(values[0]);
    }
    std::vector<double> logs(values.size());
    std::transform(values.begin(), values.end(), logs.begin(),
                   [](double v) { return std::log(v); });
    return sorted_compensated_sum(std::move(logs)) / static_cast<double>(values.size());
}

double geom_mean(std::span<const double> values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (lo == values.end()) {
        throw Error(ErrorCode::EmptyVector, "mean of an empty vector");
    }
    if (*lo == *hi) {
        return *lo;
    }
    return std::clamp(std::exp(log_mean(values)), *lo, *hi);
}

double arith_mean(const SampleVector& x) { return arith_mean(x.values()); }
double log_mean(const SampleVector& x) { return log_mean(x.values()); }
double geom_mean(const SampleVector& x) { return geom_mean(x.values()); }

MeanSummary summarize(const SampleVector& x) {
    MeanSummary s;
    s.n = x.size();
    s.arith_mean = arith_mean(x);
    s.geom_mean = geom_mean(x);
    // Rounding can put the geometric mean an ulp above the arithmetic one for
    // near-constant input.
    s.inter_mean_distance = std::max(0.0, s.arith_mean - s.geom_mean);
    s.flatness = std::min(1.0, s.geom_mean / s.arith_mean);
    s.min = x.min();
    s.max = x.max();
    return s;
}

std::vector<double> log_transform(const SampleVector& x, const TransformOptions& opts) {
    if (!(opts.base > 1.0) || !std::isfinite(opts.base)) {
        throw Error(ErrorCode::InvalidParams, "logarithm base must be > 1");
    }
    const double ln_base = std::log(opts.base);
    std::vector<double> out;
    out.reserve(x.size());
    switch (opts.mode) {
    case TransformMode::Plain:
        for (double v : x) out.push_back(std::log(v) / ln_base);
        break;
    case TransformMode::Offset:
        if (!(opts.offset >= 0.0)) {
            throw Error(ErrorCode::InvalidParams, "offset must be >= 0");
        }
        if (opts.offset >= x.min()) {
            throw Error(ErrorCode::OffsetTooLarge,
                        "offset " + format_value(opts.offset) + " must be below min(x) = " +
                            format_value(x.min()),
                        std::nullopt, opts.offset);
        }
        for (double v : x) out.push_back(std::log(v - opts.offset) / ln_base);
        break;
    case TransformMode::Clamp:
        if (!(opts.clamp_epsilon > 0.0)) {
            throw Error(ErrorCode::InvalidParams, "clamp epsilon must be > 0");
        }
        for (double v : x) out.push_back(std::log(std::max(v, opts.clamp_epsilon)) / ln_base);
        break;
    }
    return out;
}

BaseSensitivity base_sensitivity(const SampleVector& x, double base) {
    if (!(base > 1.0) || !std::isfinite(base)) {
        throw Error(ErrorCode::InvalidParams, "logarithm base must be > 1");
    }
    const double m = x.min();
    return {m < base, 1.0 / (std::log(base) * m)};
}

SampleVector concat(const SampleVector& x, const SampleVector& y) {
    std::vector<double> out(x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return SampleVector::validate(std::move(out));
}

std::vector<double> remove_elements(std::span<const double> x, std::span<const double> y,
                                    double abs_tolerance) {
    if (!(abs_tolerance >= 0.0)) {
        throw Error(ErrorCode::InvalidParams, "matching tolerance must be >= 0");
    }
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> wanted(y.begin(), y.end());
    std::sort(wanted.begin(), wanted.end());

    // Greedy two-pointer matching: each wanted value takes the smallest unused
    // element inside its tolerance window.
    std::vector<bool> removed(x.size(), false);
    std::size_t p = 0;
    for (double w : wanted) {
        while (p < order.size() && x[order[p]] < w - abs_tolerance) ++p;
        if (p == order.size() || x[order[p]] > w + abs_tolerance) {
            throw Error(ErrorCode::ElementNotPresent,
                        "value " + format_value(w) + " is not present with sufficient multiplicity",
                        std::nullopt, w);
        }
        removed[order[p]] = true;
        ++p;
    }

    std::vector<double> out;
    out.reserve(x.size() - y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!removed[i]) out.push_back(x[i]);
    }
    return out;
}

SampleVector multiset_difference(const SampleVector& x, const SampleVector& y,
                                 double abs_tolerance) {
    auto rest = remove_elements(x.values(), y.values(), abs_tolerance);
    if (rest.empty()) {
        throw Error(ErrorCode::EmptyVector, "multiset difference would leave no elements");
    }
    return SampleVector::validate(std::move(rest));
}

} // namespace logparadox
