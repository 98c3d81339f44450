#include "logparadox/finite_diff.hpp"

#include <cmath>
#include <string>

namespace logparadox {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int compare(double a, double b) noexcept { return (a > b) - (a < b); }

void check_delete(const SampleVector& x, const Delete& d) {
    if (d.y.size() >= x.size()) {
        throw Error(ErrorCode::DeleteLargerThanVector,
                    "cannot delete " + std::to_string(d.y.size()) + " elements from a vector of " +
                        std::to_string(x.size()));
    }
    (void)remove_elements(x.values(), d.y.values());
}

void check_replace(const SampleVector& x, const Replace& r) {
    if (x.size() + r.y.size() <= r.z.size()) {
        throw Error(ErrorCode::DeleteLargerThanVector,
                    "replacement would remove every element");
    }
    std::vector<double> grown(x.begin(), x.end());
    grown.insert(grown.end(), r.y.begin(), r.y.end());
    (void)remove_elements(grown, r.z.values());
}

void check_same_size(const Replace& r) {
    if (r.y.size() != r.z.size()) {
        throw Error(ErrorCode::ReplaceSizeMismatch,
                    "geometric replacement difference needs |Y| == |Z| (got " +
                        std::to_string(r.y.size()) + " and " + std::to_string(r.z.size()) + ")");
    }
}

} // namespace

int sign_with_tolerance(double v, double tolerance) noexcept {
    if (std::abs(v) < tolerance) return 0;
    return v > 0.0 ? 1 : -1;
}

bool strictly_opposite(double a, double b) noexcept {
    const int sa = sign_with_tolerance(a);
    const int sb = sign_with_tolerance(b);
    return sa != 0 && sb != 0 && sa != sb;
}

SampleVector perturb(const SampleVector& x, const Perturbation& p, double abs_tolerance) {
    return std::visit(
        overloaded{
            [&](const Concat& c) { return concat(x, c.y); },
            [&](const Delete& d) {
                if (d.y.size() >= x.size()) check_delete(x, d);
                return multiset_difference(x, d.y, abs_tolerance);
            },
            [&](const Replace& r) {
                return multiset_difference(concat(x, r.y), r.z, abs_tolerance);
            },
        },
        p);
}

double diff_arith(const SampleVector& x, const Perturbation& p) {
    const double n = static_cast<double>(x.size());
    return std::visit(
        overloaded{
            [&](const Concat& c) {
                const double m = static_cast<double>(c.y.size());
                return m / (n + m) * (arith_mean(c.y) - arith_mean(x));
            },
            [&](const Delete& d) {
                check_delete(x, d);
                const double m = static_cast<double>(d.y.size());
                return m / (n - m) * (arith_mean(x) - arith_mean(d.y));
            },
            [&](const Replace& r) {
                check_replace(x, r);
                const double m = static_cast<double>(r.y.size());
                const double k = static_cast<double>(r.z.size());
                if (r.y.size() == r.z.size()) {
                    return m / n * (arith_mean(r.y) - arith_mean(r.z));
                }
                const double total = n + m - k;
                return -(m - k) / total * arith_mean(x) + m / total * arith_mean(r.y) -
                       k / total * arith_mean(r.z);
            },
        },
        p);
}

double diff_geom(const SampleVector& x, const Perturbation& p) {
    const double n = static_cast<double>(x.size());
    // mu*(X) * (ratio^exponent - 1) evaluated as mu*(X) * expm1(exponent * log ratio).
    return std::visit(
        overloaded{
            [&](const Concat& c) {
                const double m = static_cast<double>(c.y.size());
                return geom_mean(x) * std::expm1(m / (n + m) * (log_mean(c.y) - log_mean(x)));
            },
            [&](const Delete& d) {
                check_delete(x, d);
                const double m = static_cast<double>(d.y.size());
                return geom_mean(x) * std::expm1(m / (n - m) * (log_mean(x) - log_mean(d.y)));
            },
            [&](const Replace& r) {
                check_same_size(r);
                check_replace(x, r);
                const double m = static_cast<double>(r.y.size());
                return geom_mean(x) * std::expm1(m / n * (log_mean(r.y) - log_mean(r.z)));
            },
        },
        p);
}

double diff_id(const SampleVector& x, const Perturbation& p) {
    return diff_arith(x, p) - diff_geom(x, p);
}

DiffResult closed_form_diff(const SampleVector& x, const Perturbation& p) {
    DiffResult r;
    r.d_arith = diff_arith(x, p);
    r.d_geom = diff_geom(x, p);
    r.d_id = r.d_arith - r.d_geom;
    r.paradox_signed = strictly_opposite(r.d_arith, r.d_geom);
    return r;
}

DiffResult oracle_diff(const SampleVector& x, const Perturbation& p) {
    if (const auto* d = std::get_if<Delete>(&p)) check_delete(x, *d);
    if (const auto* r = std::get_if<Replace>(&p)) check_replace(x, *r);
    const SampleVector perturbed = perturb(x, p);
    const double a0 = arith_mean(x);
    const double g0 = geom_mean(x);
    const double a1 = arith_mean(perturbed);
    const double g1 = geom_mean(perturbed);
    DiffResult r;
    r.d_arith = a1 - a0;
    r.d_geom = g1 - g0;
    r.d_id = (a1 - g1) - (a0 - g0);
    r.paradox_signed = strictly_opposite(r.d_arith, r.d_geom);
    return r;
}

SignPrediction condition_check(const SampleVector& x, const Perturbation& p) {
    // Geometric comparisons use mean logs, which order identically to mu*.
    return std::visit(
        overloaded{
            [&](const Concat& c) {
                return SignPrediction{compare(arith_mean(c.y), arith_mean(x)),
                                      compare(log_mean(c.y), log_mean(x))};
            },
            [&](const Delete& d) {
                check_delete(x, d);
                return SignPrediction{compare(arith_mean(x), arith_mean(d.y)),
                                      compare(log_mean(x), log_mean(d.y))};
            },
            [&](const Replace& r) {
                check_same_size(r);
                check_replace(x, r);
                return SignPrediction{compare(arith_mean(r.y), arith_mean(r.z)),
                                      compare(log_mean(r.y), log_mean(r.z))};
            },
        },
        p);
}

} // namespace logparadox
