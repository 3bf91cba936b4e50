#pragma once

// Expectation values and derived statistics: quadrature variances and photon
// statistics, computed either from a state vector or from the closed series
// of the negative-m family as a cross-check.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nlcs/errors.hpp"
#include "nlcs/fock.hpp"
#include "nlcs/special_functions.hpp"

namespace nlcs {

// <n> below this leaves Mandel q undefined rather than divided.
inline constexpr double kMandelDenomTol = 1e-12;

/// Moment set and derived statistics of one state. Quadrature convention:
/// x = (a + a†)/sqrt(2), p = (a - a†)/(i sqrt(2)), vacuum variance 1/2.
struct ObservableReport {
    cplx mean_a{};
    cplx mean_a2{};
    double mean_n = 0.0;
    double mean_n2 = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    std::optional<double> mandel_q;
};

namespace detail {

// Var(x) and Var(p) assembled with complex arithmetic retained; the
// imaginary parts must cancel and are kept inspectable.
inline std::pair<cplx, cplx> quadrature_variances(cplx a, cplx a2, double n) {
    const cplx ad = std::conj(a);
    const cplx ad2 = std::conj(a2);
    const cplx common = 1.0 + 2.0 * n - 2.0 * a * ad;
    const cplx vx = 0.5 * (common + a2 + ad2 - a * a - ad * ad);
    const cplx vp = 0.5 * (common - a2 - ad2 + a * a + ad * ad);
    return {vx, vp};
}

}  // namespace detail

/// Assemble a report from the four raw moments; shared by the vector and
/// analytic-series paths.
inline ObservableReport assemble_report(cplx mean_a, cplx mean_a2, double mean_n,
                                        double mean_n2) {
    ObservableReport rep;
    rep.mean_a = mean_a;
    rep.mean_a2 = mean_a2;
    rep.mean_n = mean_n;
    rep.mean_n2 = mean_n2;
    const auto [vx, vp] = detail::quadrature_variances(mean_a, mean_a2, mean_n);
    rep.var_x = vx.real();
    rep.var_p = vp.real();
    if (mean_n >= kMandelDenomTol) {
        const double var_n = mean_n2 - mean_n * mean_n;
        rep.mandel_q = (var_n - mean_n) / mean_n;
    }
    return rep;
}

namespace detail {

inline void require_normalized(const FockState& s, const char* what) {
    if (std::abs(norm_squared(s) - 1.0) > kNormTol)
        throw std::invalid_argument(std::string(what) + ": state is not normalized");
}

}  // namespace detail

/// <a>, <a^2>, <n>, <n^2> of a normalized state, with Var(x), Var(p) and
/// Mandel q derived from them.
inline ObservableReport moments(const FockState& s) {
    detail::require_normalized(s, "moments");
    const std::size_t dim = s.dim();
    cplx mean_a{};
    cplx mean_a2{};
    double mean_n = 0.0;
    double mean_n2 = 0.0;
    for (std::size_t n = 0; n < dim; ++n) {
        const double nn = static_cast<double>(n);
        const double p = std::norm(s[n]);
        mean_n += nn * p;
        mean_n2 += nn * nn * p;
        if (n + 1 < dim) mean_a += std::sqrt(nn + 1.0) * std::conj(s[n]) * s[n + 1];
        if (n + 2 < dim)
            mean_a2 += std::sqrt((nn + 1.0) * (nn + 2.0)) * std::conj(s[n]) * s[n + 2];
    }
    return assemble_report(mean_a, mean_a2, mean_n, mean_n2);
}

/// The same report for |alpha,-m>, evaluated from the closed series with
/// weights w(n) = |alpha|^{2n} n! / ((n+m)!)^2:
///   <a>  = alpha   sum w(n) (n+1)/(n+m+1)            / sum w(n)
///   <a2> = alpha^2 sum w(n) (n+1)(n+2)/((n+m+1)(n+m+2)) / sum w(n)
///   <n>, <n^2> with weights n, n^2.
inline ObservableReport analytic_moments_negative_m(cplx alpha, unsigned m) {
    if (m < 1)
        throw std::invalid_argument("analytic_moments_negative_m: m must be >= 1");
    const double x = std::norm(alpha);
    double w = 1.0;
    double sum_w = 0.0, sum_a = 0.0, sum_a2 = 0.0, sum_n = 0.0, sum_n2 = 0.0;
    bool converged = false;
    for (std::size_t n = 0; n < kSeriesTermCap; ++n) {
        const double nn = static_cast<double>(n);
        const double dm1 = nn + static_cast<double>(m) + 1.0;
        const double dm2 = nn + static_cast<double>(m) + 2.0;
        sum_w += w;
        sum_a += w * (nn + 1.0) / dm1;
        sum_a2 += w * (nn + 1.0) * (nn + 2.0) / (dm1 * dm2);
        sum_n += w * nn;
        sum_n2 += w * nn * nn;
        const double next = w * x * (nn + 1.0) / (dm1 * dm1);
        if (!std::isfinite(sum_w + sum_n2)) break;
        if (next * dm2 * dm2 <= kSeriesTol * sum_w) {
            converged = true;
            break;
        }
        w = next;
    }
    if (!converged)
        throw convergence_error(
            "analytic_moments_negative_m: series did not converge");
    return assemble_report(alpha * sum_a / sum_w, alpha * alpha * sum_a2 / sum_w,
                           sum_n / sum_w, sum_n2 / sum_w);
}

/// p(n) = |c_n|^2 of a normalized state.
inline std::vector<double> photon_distribution(const FockState& s) {
    detail::require_normalized(s, "photon_distribution");
    std::vector<double> p(s.dim());
    for (std::size_t n = 0; n < s.dim(); ++n) p[n] = std::norm(s[n]);
    return p;
}

/// Mandel q = (<n^2> - <n>^2 - <n>) / <n>; empty when <n> is below
/// kMandelDenomTol (the alpha = 0 singularity).
inline std::optional<double> mandel_q(const FockState& s) {
    return moments(s).mandel_q;
}

}  // namespace nlcs
