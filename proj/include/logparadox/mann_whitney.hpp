#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace logparadox {

enum class Alternative { TwoSided, Greater, Less };
enum class MwuMethod { Exact, NormalApprox };
/// Auto picks Exact for n1 + n2 <= kExactLimit without ties, NormalApprox otherwise.
enum class MwuMethodChoice { Auto, Exact, NormalApprox };

inline constexpr std::size_t kExactLimit = 20;
/// Largest pooled size for which exact counts fit in 64 bits.
inline constexpr std::size_t kExactCountLimit = 60;

[[nodiscard]] const char* to_string(Alternative a) noexcept;
[[nodiscard]] const char* to_string(MwuMethod m) noexcept;

struct MwuResult {
    double u_statistic = 0.0; // U of the first sample, in [0, n1 * n2]
    double p_value = 1.0;
    MwuMethod method = MwuMethod::NormalApprox;
    Alternative alternative = Alternative::TwoSided;
};

/// Mann-Whitney U test with midranks. "Greater" tests whether `a` tends to be
/// larger than `b`. The normal approximation applies tie and continuity
/// corrections. Forcing Exact on tied data throws InvalidParams.
[[nodiscard]] MwuResult mwu_test(std::span<const double> a, std::span<const double> b,
                                 Alternative alternative = Alternative::TwoSided,
                                 MwuMethodChoice method = MwuMethodChoice::Auto);

/// Number of rank assignments yielding each U value, index u in [0, n1 * n2].
[[nodiscard]] std::vector<std::uint64_t> mwu_exact_counts(std::size_t n1, std::size_t n2);

/// Exact p-value of an integral U under the no-ties null.
[[nodiscard]] double mwu_exact_p(std::size_t u, std::size_t n1, std::size_t n2, Alternative alternative);

} // namespace logparadox
