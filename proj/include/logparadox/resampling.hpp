#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "logparadox/core_stats.hpp"
#include "logparadox/mann_whitney.hpp"
#include "logparadox/random.hpp"

namespace logparadox {

enum class Statistic { ArithMean, GeomMean };

[[nodiscard]] const char* to_string(Statistic s) noexcept;

struct BootstrapConfig {
    std::size_t sample_size = 50;
    std::size_t n_resamples = 50;
    Statistic statistic = Statistic::GeomMean;
    std::uint64_t seed = 0;
};

/// Sampling distribution of the statistic over `n_resamples` draws of
/// `sample_size` elements with replacement. Two configs that differ only in
/// the statistic draw identical resamples.
[[nodiscard]] std::vector<double> bootstrap(const SampleVector& a, const BootstrapConfig& cfg);

/// Replaces `k` distinct randomly chosen elements with uniform draws on [lo, hi].
[[nodiscard]] SampleVector replace_random(const SampleVector& a, std::size_t k, double lo, double hi,
                                          RandomStream& rng);

struct SweepConfig {
    std::size_t sample_size = 200;
    std::size_t n_resamples = 50;
    double max_fraction = 0.1;
    std::size_t step = 1;
    std::uint64_t seed = 0;
    Alternative alternative = Alternative::TwoSided;
};

struct SweepPoint {
    std::size_t k = 0;
    double p_geom = 1.0;
    double p_arith = 1.0;
    double d_arith = 0.0; // mean of A' arithmetic sample means minus A's
    double d_geom = 0.0;  // mean of A' geometric sample means minus A's
    bool paradox_direction_ok = false;
};

struct ThresholdCrossing {
    double alpha = 0.0;
    std::optional<std::size_t> k; // first k with p_geom < alpha
};

inline constexpr double kSweepAlphas[] = {0.05, 0.01, 0.001};

struct SweepReport {
    SweepConfig config;
    std::size_t n = 0;
    double replace_lo = 0.0; // mu*(A)
    double replace_hi = 0.0; // mu+(A)
    std::vector<SweepPoint> points;
    std::vector<ThresholdCrossing> crossings;
};

/// For k = 0, step, 2 step, ... up to floor(max_fraction |A|): replace k random
/// elements of A by draws on [mu*(A), mu+(A)] of the original A, bootstrap A
/// and A' and compare their sample-mean distributions with Mann-Whitney U.
/// Sweep point k draws from its own substream of the master seed; A and A'
/// share resample indices at each point.
[[nodiscard]] SweepReport replacement_sweep(const SampleVector& a, const SweepConfig& cfg);

} // namespace logparadox
