#include "logparadox/resampling.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace logparadox {

const char* to_string(Statistic s) noexcept {
    return s == Statistic::ArithMean ? "arith_mean" : "geom_mean";
}

std::vector<double> bootstrap(const SampleVector& a, const BootstrapConfig& cfg) {
    if (cfg.sample_size == 0 || cfg.n_resamples == 0) {
        throw Error(ErrorCode::InvalidParams, "bootstrap sample size and resample count must be >= 1");
    }
    RandomStream rng(cfg.seed);
    std::vector<double> sample(cfg.sample_size);
    std::vector<double> out;
    out.reserve(cfg.n_resamples);
    for (std::size_t i = 0; i < cfg.n_resamples; ++i) {
        for (double& v : sample) v = a[rng.index(a.size())];
        out.push_back(cfg.statistic == Statistic::ArithMean ? arith_mean(sample) : geom_mean(sample));
    }
    return out;
}

SampleVector replace_random(const SampleVector& a, std::size_t k, double lo, double hi,
                            RandomStream& rng) {
    if (k > a.size()) {
        throw Error(ErrorCode::InvalidParams, "cannot replace " + std::to_string(k) +
                                                  " elements of a vector of " + std::to_string(a.size()));
    }
    if (!(lo > 0.0) || !(hi >= lo)) {
        throw Error(ErrorCode::InvalidParams, "replacement interval must satisfy 0 < lo <= hi");
    }
    std::vector<std::size_t> idx(a.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<double> out(a.begin(), a.end());
    // Partial Fisher-Yates: the first k slots of idx become the chosen positions.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.index(a.size() - i);
        std::swap(idx[i], idx[j]);
        out[idx[i]] = hi > lo ? rng.uniform(lo, hi) : lo;
    }
    return SampleVector::validate(std::move(out));
}

SweepReport replacement_sweep(const SampleVector& a, const SweepConfig& cfg) {
    if (!(cfg.max_fraction > 0.0) || cfg.max_fraction > 0.5) {
        throw Error(ErrorCode::FractionOutOfRange, "max fraction must lie in (0, 0.5]", std::nullopt,
                    cfg.max_fraction);
    }
    if (cfg.step == 0) {
        throw Error(ErrorCode::InvalidParams, "sweep step must be >= 1");
    }

    SweepReport report;
    report.config = cfg;
    report.n = a.size();
    report.replace_lo = geom_mean(a);
    report.replace_hi = arith_mean(a);

    const auto k_max =
        static_cast<std::size_t>(std::floor(cfg.max_fraction * static_cast<double>(a.size())));
    const RandomStream master(cfg.seed);

    for (std::size_t k = 0; k <= k_max; k += cfg.step) {
        const RandomStream point = master.substream(k);
        RandomStream replace_rng = point.substream(0);
        const SampleVector a_prime = replace_random(a, k, report.replace_lo, report.replace_hi, replace_rng);

        BootstrapConfig boot{cfg.sample_size, cfg.n_resamples, Statistic::ArithMean,
                             point.substream(1).seed()};
        const auto arith_a = bootstrap(a, boot);
        const auto arith_b = bootstrap(a_prime, boot);
        boot.statistic = Statistic::GeomMean;
        const auto geom_a = bootstrap(a, boot);
        const auto geom_b = bootstrap(a_prime, boot);

        SweepPoint sp;
        sp.k = k;
        sp.p_arith = mwu_test(arith_b, arith_a, cfg.alternative).p_value;
        sp.p_geom = mwu_test(geom_b, geom_a, cfg.alternative).p_value;
        sp.d_arith = arith_mean(std::span<const double>(arith_b)) - arith_mean(std::span<const double>(arith_a));
        sp.d_geom = arith_mean(std::span<const double>(geom_b)) - arith_mean(std::span<const double>(geom_a));
        sp.paradox_direction_ok = sp.d_geom > 0.0 && sp.d_arith < 0.0;
        report.points.push_back(sp);
    }

    for (double alpha : kSweepAlphas) {
        ThresholdCrossing c{alpha, std::nullopt};
        for (const auto& sp : report.points) {
            if (sp.p_geom < alpha) {
                c.k = sp.k;
                break;
            }
        }
        report.crossings.push_back(c);
    }
    return report;
}

} // namespace logparadox
