#include "logparadox/generators.hpp"

#include <cmath>
#include <random>

#include "logparadox/random.hpp"

namespace logparadox {

SampleVector gen_exponential(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw Error(ErrorCode::InvalidParams, "exponential dataset needs n >= 1");
    }
    RandomStream rng(seed);
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> out;
    out.reserve(n);
    while (out.size() < n) {
        const double e = exp1(rng);
        if (e > 0.0) out.push_back(10.0 + 1000.0 * e);
    }
    return SampleVector::validate(std::move(out));
}

SampleVector gen_symmetric_tails(double mu, double sigma, std::size_t n, std::uint64_t seed) {
    if (!(mu >= 10.0) || !std::isfinite(mu) || !(sigma >= 0.0) || !std::isfinite(sigma) || n == 0) {
        throw Error(ErrorCode::InvalidParams, "symmetric tails need mu >= 10, sigma >= 0 and n >= 1");
    }
    RandomStream rng(seed);
    std::normal_distribution<double> normal(mu, sigma);
    std::vector<double> out;
    out.reserve(n + 2);
    out.push_back(std::sqrt(mu));
    while (out.size() < n + 1) {
        const double v = sigma > 0.0 ? normal(rng) : mu;
        if (v > 0.0) out.push_back(v);
    }
    out.push_back(mu * mu);
    return SampleVector::validate(std::move(out));
}

} // namespace logparadox
