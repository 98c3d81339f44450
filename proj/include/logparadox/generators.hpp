#pragma once

#include <cstddef>
#include <cstdint>

#include "logparadox/core_stats.hpp"

namespace logparadox {

/// n values of 10 + 1000 e with e ~ Exponential(1); every value exceeds 10.
[[nodiscard]] SampleVector gen_exponential(std::size_t n, std::uint64_t seed);

/// [sqrt(mu)] || n draws of Normal(mu, sigma) || [mu^2]. Non-positive normal
/// draws are redrawn. Requires mu >= 10, sigma >= 0, n >= 1.
[[nodiscard]] SampleVector gen_symmetric_tails(double mu, double sigma, std::size_t n, std::uint64_t seed);

} // namespace logparadox
