#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "logparadox/error.hpp"

namespace logparadox {

/// Non-empty vector of finite, strictly positive reals. Treated as a multiset:
/// element order is kept for reporting but never changes a computed result.
class SampleVector {
public:
    /// Throws Error{EmptyVector | NonFiniteElement | NonPositiveElement}.
    static SampleVector validate(std::vector<double> values);
    static SampleVector validate(std::initializer_list<double> values) {
        return validate(std::vector<double>(values));
    }

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }
    [[nodiscard]] double min() const noexcept;
    [[nodiscard]] double max() const noexcept;

    friend bool operator==(const SampleVector&, const SampleVector&) = default;

private:
    explicit SampleVector(std::vector<double> values) : values_(std::move(values)) {}
    std::vector<double> values_;
};

struct MeanSummary {
    std::size_t n = 0;
    double arith_mean = 0.0;
    double geom_mean = 0.0;
    double inter_mean_distance = 0.0;
    double flatness = 1.0;
    double min = 0.0;
    double max = 0.0;
};

enum class TransformMode { Plain, Offset, Clamp };

struct TransformOptions {
    double base = 10.0;
    double offset = 0.0;
    double clamp_epsilon = 1.0e-12;
    TransformMode mode = TransformMode::Plain;
};

struct BaseSensitivity {
    bool min_below_base = false;
    double derivative_at_min = 0.0;
};

// Means are computed over the sorted values with compensated summation, so any
// two multiset-equal vectors produce bit-identical results.
[[nodiscard]] double arith_mean(const SampleVector& x);
[[nodiscard]] double geom_mean(const SampleVector& x);
/// Mean of natural logarithms; geom_mean(x) == exp(log_mean(x)) except for
/// constant vectors, where geom_mean returns the constant exactly.
[[nodiscard]] double log_mean(const SampleVector& x);

[[nodiscard]] double arith_mean(std::span<const double> values);
[[nodiscard]] double log_mean(std::span<const double> values);
[[nodiscard]] double geom_mean(std::span<const double> values);

[[nodiscard]] MeanSummary summarize(const SampleVector& x);

/// Elementwise logarithm in `opts.base`. Offset mode throws OffsetTooLarge when
/// offset >= min(x).
[[nodiscard]] std::vector<double> log_transform(const SampleVector& x, const TransformOptions& opts);

/// Slope of log_base at min(x), and whether min(x) lies below the base.
[[nodiscard]] BaseSensitivity base_sensitivity(const SampleVector& x, double base);

[[nodiscard]] SampleVector concat(const SampleVector& x, const SampleVector& y);

/// X minus Y as multisets. Elements match when |a - b| <= abs_tolerance
/// (exact equality at the default 0). Throws ElementNotPresent or, when
/// nothing would remain, EmptyVector.
[[nodiscard]] SampleVector multiset_difference(const SampleVector& x, const SampleVector& y,
                                               double abs_tolerance = 0.0);

/// Same matching as multiset_difference but returns the surviving values
/// without requiring them to be non-empty.
[[nodiscard]] std::vector<double> remove_elements(std::span<const double> x,
                                                  std::span<const double> y,
                                                  double abs_tolerance = 0.0);

} // namespace logparadox
