#pragma once

#include <variant>

#include "logparadox/core_stats.hpp"

namespace logparadox {

/// X || Y
struct Concat {
    SampleVector y;
};

/// X \ Y; Y must be a sub-multiset of X and strictly smaller.
struct Delete {
    SampleVector y;
};

/// (X || Y) \ Z
struct Replace {
    SampleVector y;
    SampleVector z;
};

using Perturbation = std::variant<Concat, Delete, Replace>;

/// Differences are always F(perturbed) - F(original).
struct DiffResult {
    double d_arith = 0.0;
    double d_geom = 0.0;
    double d_id = 0.0;
    bool paradox_signed = false;
};

struct SignPrediction {
    int sign_arith = 0;
    int sign_geom = 0;
};

/// Differences with magnitude below this are treated as zero when signed.
inline constexpr double kZeroSignTolerance = 1.0e-12;

[[nodiscard]] int sign_with_tolerance(double v, double tolerance = kZeroSignTolerance) noexcept;

/// True when both values are outside the zero band and of opposite sign.
[[nodiscard]] bool strictly_opposite(double a, double b) noexcept;

/// Builds the perturbed vector explicitly.
[[nodiscard]] SampleVector perturb(const SampleVector& x, const Perturbation& p,
                                 double abs_tolerance = 0.0);

// Closed forms. Only means of X, Y and Z enter the formulas; the elements of Y
// and Z are checked against X for membership and size constraints.
[[nodiscard]] double diff_arith(const SampleVector& x, const Perturbation& p);
/// Replace requires |Y| == |Z| (ReplaceSizeMismatch otherwise).
[[nodiscard]] double diff_geom(const SampleVector& x, const Perturbation& p);
[[nodiscard]] double diff_id(const SampleVector& x, const Perturbation& p);
[[nodiscard]] DiffResult closed_form_diff(const SampleVector& x, const Perturbation& p);

/// Recomputes both means from scratch on the perturbed vector.
[[nodiscard]] DiffResult oracle_diff(const SampleVector& x, const Perturbation& p);

/// Signs of the differences predicted from mean comparisons alone.
[[nodiscard]] SignPrediction condition_check(const SampleVector& x, const Perturbation& p);

} // namespace logparadox
