#pragma once

#include <cstdint>
#include <random>

namespace logparadox {

/// SplitMix64 finalizer; used to derive independent seeds.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seedable, splittable stream: a 64-bit Mersenne Twister whose substreams are
/// keyed by (seed, index), so adding a substream never perturbs another.
class RandomStream {
public:
    using result_type = std::mt19937_64::result_type;

    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    [[nodiscard]] RandomStream substream(std::uint64_t index) const {
        return RandomStream(mix64(seed_ ^ mix64(index + 0x632be59bd9b4e019ULL)));
    }

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace logparadox
