#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "logparadox/core_stats.hpp"

namespace logparadox {

enum class Ordering { Less, Equal, Greater };

[[nodiscard]] const char* to_string(Ordering o) noexcept;

/// Comparison of two vectors. d_a and d_g are mu(B) - mu(A); differences
/// inside the zero band count as ties and are stored as 0.
struct ParadoxVerdict {
    Ordering arith_order = Ordering::Equal; // mu+(A) relative to mu+(B)
    Ordering geom_order = Ordering::Equal;  // mu*(A) relative to mu*(B)
    bool is_paradox = false;
    double d_a = 0.0;
    double d_g = 0.0;
    double criterion = 0.0; // -d_a * d_g
};

[[nodiscard]] ParadoxVerdict paradox_verdict(const SampleVector& a, const SampleVector& b);

/// Q = (mu*(X) + mu+(X)) / 2.
[[nodiscard]] double optimal_target(const SampleVector& x);

/// Replacement gap and ratio a same-size replacement (|Y| = |Z| = replace_count)
/// must hit for the perturbed vector to collapse onto Q:
///   mu+(Y) - mu+(Z) = N (mu*(X) - mu+(X)) / (2 M)
///   mu*(Y) / mu*(Z) = (mu+(X) / (2 mu*(X)) + 1/2)^(N / M)
struct ReplacementTargets {
    double arith_gap = 0.0;
    double geom_ratio = 1.0;
};

[[nodiscard]] ReplacementTargets optimal_replacement_targets(const SampleVector& x,
                                                             std::size_t replace_count);

struct HeuristicStep {
    double q = 0.0;
    double min = 0.0; // m of the input vector
    double max = 0.0; // M of the input vector
    std::vector<double> removed;
    std::vector<double> inserted;
    bool precondition_holds = false; // sqrt(m M) < q < (m + M) / 2
};

[[nodiscard]] bool heuristic_precondition(double m, double big_m, double q) noexcept;

/// Appends Q to X.
[[nodiscard]] std::pair<SampleVector, HeuristicStep> insert_step(const SampleVector& x);

namespace selector {
struct Random {
    std::uint64_t seed = 0;
};
struct Min {};
struct Max {};
struct MinMax {};
} // namespace selector

using ReplaceSelector = std::variant<selector::Random, selector::Min, selector::Max, selector::MinMax>;

/// Replacement heuristic. Random swaps one random element for a uniform draw
/// on [mu*(X), mu+(X)]; Min / Max swap the extreme for Q; MinMax swaps one
/// instance each of min and max for [Q, Q] (needs |X| >= 3). Removed elements
/// are dropped in place and inserted values are appended.
[[nodiscard]] std::pair<SampleVector, HeuristicStep> replace_step(const SampleVector& x,
                                                                  const ReplaceSelector& sel);

/// d(m, M) = (m + M) / 2 - sqrt(m M). Symmetric in its arguments.
[[nodiscard]] double d_score(double m, double big_m);

struct GradientPoint {
    double candidate = 0.0;
    double d_arith = 0.0;
    double d_geom = 0.0;
    double product = 0.0;
};

/// Concat([c]) differences for each candidate c.
[[nodiscard]] std::vector<GradientPoint> gradient_product_sweep(const SampleVector& x,
                                                                const std::vector<double>& candidates);

/// `points` log-spaced values over [min(X)/10, max(X)*10].
[[nodiscard]] std::vector<double> default_candidate_grid(const SampleVector& x,
                                                         std::size_t points = 400);

/// rows follow m_grid, columns follow big_m_grid.
[[nodiscard]] std::vector<std::vector<double>> d_surface(const std::vector<double>& m_grid,
                                                         const std::vector<double>& big_m_grid);

} // namespace logparadox
