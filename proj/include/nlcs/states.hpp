#pragma once

// Construction of every state family: coherent states, photon-added states
// (series and operator routes), and the negative-m family (series, inverse
// ladder, and deformed-exponential routes), plus the generic Taylor
// application of e^{alpha G†} to a seed number state.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nlcs/fock.hpp"
#include "nlcs/operators.hpp"
#include "nlcs/special_functions.hpp"

namespace nlcs {

inline constexpr std::size_t kTaylorTermCap = 500;
inline constexpr double kDefaultTailTol = 1e-12;

enum class StateKind { coherent, photon_added, negative_m };

/// Family label (kind, alpha, m). kind == coherent forces m == 0.
struct StateFamily {
    StateKind kind;
    cplx alpha;
    unsigned m;

    StateFamily(StateKind kind_, cplx alpha_, unsigned m_)
        : kind(kind_), alpha(alpha_), m(m_) {
        if (kind == StateKind::coherent && m != 0)
            throw std::invalid_argument("StateFamily: coherent states carry m = 0");
    }
};

namespace detail {

inline void require_tail(double alpha_abs, int m, std::size_t dim, double tail_tol,
                         const char* what) {
    const double frac = tail_fraction(alpha_abs, m, dim);
    if (!(frac < tail_tol))
        throw truncation_error(std::string(what) + ": dimension " +
                                   std::to_string(dim) + " leaves tail mass above " +
                                   std::to_string(tail_tol),
                               frac);
}

inline void require_loss(const FockState& s, double tail_tol, const char* what) {
    const double frac = lost_fraction(s);
    if (frac > tail_tol)
        throw truncation_error(std::string(what) + ": truncation loss above tolerance",
                               frac);
}

// Working dimension for ladder-route constructions: m transient levels on
// top of dim, plus headroom until the coherent precursor's own tail sits far
// below the requested tolerance, so that recorded losses reflect the final
// state rather than scaffolding.
inline std::size_t route_work_dim(double alpha_abs, unsigned m, std::size_t dim,
                                  double tail_tol) {
    const double target = tail_tol * 1e-3;
    const std::size_t cap = dim + 8 * dim + 256;
    std::size_t d = dim;
    while (d < cap && !(tail_fraction(alpha_abs, 0, d) < target)) d += 8;
    return d + m;
}

// First dim amplitudes, with the truncation loss reset to the cropped mass.
// In the padded ladder routes every amplitude dropped at the workspace edge
// maps to a final level >= dim, outside the kept window, and its recorded
// magnitude carries the precursor's scale rather than the final state's; the
// crop mass is the out-of-window mass actually commensurate with the result.
inline FockState crop_to_window(const FockState& s, std::size_t dim) {
    if (s.dim() <= dim) return s;
    std::vector<cplx> out(s.amplitudes().begin(),
                          s.amplitudes().begin() + static_cast<std::ptrdiff_t>(dim));
    double loss = 0.0;
    for (std::size_t n = dim; n < s.dim(); ++n) loss += std::norm(s[n]);
    return FockState(std::move(out), loss);
}

}  // namespace detail

/// Coherent state |alpha>: c_n proportional to alpha^n / sqrt(n!), built as
/// exp(n ln|alpha| - ln(n!)/2) with an incrementally tracked phase, then
/// normalized numerically.
inline FockState coherent(cplx alpha, std::size_t dim,
                          double tail_tol = kDefaultTailTol) {
    const double a = std::abs(alpha);
    detail::require_tail(a, 0, dim, tail_tol, "coherent");
    if (a == 0.0) return basis_state(0, dim);

    const cplx unit = alpha / a;
    const double la = std::log(a);
    std::vector<cplx> amps(dim);
    cplx phase{1.0, 0.0};
    for (std::size_t n = 0; n < dim; ++n) {
        amps[n] = std::exp(static_cast<double>(n) * la - 0.5 * log_factorial(n)) * phase;
        phase *= unit;
    }
    return normalize(FockState(std::move(amps)));
}

/// |alpha,m> from its number-state expansion: the amplitude on |n+m> is
///   exp(-|alpha|^2/2) / sqrt(L_m(-|alpha|^2) m!) * alpha^n sqrt((m+n)!) / n!
/// and levels 0..m-1 carry exactly zero. Renormalized numerically.
inline FockState photon_added_series(cplx alpha, unsigned m, std::size_t dim,
                                     double tail_tol = kDefaultTailTol) {
    const double a = std::abs(alpha);
    detail::require_tail(a, static_cast<int>(m), dim, tail_tol, "photon_added_series");
    if (a == 0.0) return basis_state(m, dim);

    const double x = a * a;
    const double pref = -0.5 * x - 0.5 * std::log(laguerre(m, -x)) - 0.5 * log_factorial(m);
    const cplx unit = alpha / a;
    const double la = std::log(a);
    std::vector<cplx> amps(dim, cplx{});
    cplx phase{1.0, 0.0};
    for (std::size_t n = 0; n + m < dim; ++n) {
        const double lmag = pref + static_cast<double>(n) * la +
                            0.5 * log_factorial(n + m) - log_factorial(n);
        amps[n + m] = std::exp(lmag) * phase;
        phase *= unit;
    }
    return normalize(FockState(std::move(amps)));
}

/// |alpha,m> by the defining route: a†^m applied to |alpha>, normalized.
/// Built in a padded workspace so transient levels above dim do not bleed
/// into the truncation loss.
inline FockState photon_added_operator(cplx alpha, unsigned m, std::size_t dim,
                                       double tail_tol = kDefaultTailTol) {
    const double a = std::abs(alpha);
    detail::require_tail(a, static_cast<int>(m), dim, tail_tol, "photon_added_operator");
    const std::size_t work = detail::route_work_dim(a, m, dim, tail_tol);
    FockState s = coherent(alpha, work, tail_tol);
    for (unsigned k = 0; k < m; ++k) s = apply_creation(s);
    s = detail::crop_to_window(s, dim);
    detail::require_loss(s, tail_tol, "photon_added_operator");
    return normalize(s);
}

/// |alpha,-m> from its number-state expansion: c_n proportional to
/// alpha^n sqrt(n!) / (n+m)!, i.e. the recursion c_n = m! sqrt(n!) alpha^n
/// / (n+m)! c_0. Renormalized numerically; m = 0 reduces to the coherent
/// state.
inline FockState negative_m_series(cplx alpha, unsigned m, std::size_t dim,
                                   double tail_tol = kDefaultTailTol) {
    const double a = std::abs(alpha);
    detail::require_tail(a, -static_cast<int>(m), dim, tail_tol, "negative_m_series");
    if (a == 0.0) return basis_state(0, dim);

    const double lfm = log_factorial(m);
    const cplx unit = alpha / a;
    const double la = std::log(a);
    std::vector<cplx> amps(dim);
    cplx phase{1.0, 0.0};
    for (std::size_t n = 0; n < dim; ++n) {
        const double lmag = static_cast<double>(n) * la + 0.5 * log_factorial(n) -
                            log_factorial(n + m) + lfm;
        amps[n] = std::exp(lmag) * phase;
        phase *= unit;
    }
    return normalize(FockState(std::move(amps)));
}

/// |alpha,-m> by the inverse-operator route: a^{-m} then a†^{-m} applied to
/// |alpha>, normalized. The round trip transits levels up to dim + m, so it
/// runs in a padded workspace and is cropped back to dim.
inline FockState negative_m_inverse_ops(cplx alpha, unsigned m, std::size_t dim,
                                        double tail_tol = kDefaultTailTol) {
    const double a = std::abs(alpha);
    detail::require_tail(a, -static_cast<int>(m), dim, tail_tol,
                         "negative_m_inverse_ops");
    const std::size_t work = detail::route_work_dim(a, m, dim, tail_tol);
    FockState s = coherent(alpha, work, tail_tol);
    for (unsigned k = 0; k < m; ++k) s = apply_annihilation_inverse(s);
    for (unsigned k = 0; k < m; ++k) s = apply_creation_inverse(s);
    s = detail::crop_to_window(s, dim);
    detail::require_loss(s, tail_tol, "negative_m_inverse_ops");
    return normalize(s);
}

/// Taylor application of e^{alpha G†} to |j>, normalized. Terms are added
/// until the term norm falls below kSeriesTol relative to the partial sum.
inline FockState deformed_exponential(const RaisingOperator& gdag, std::size_t j,
                                      cplx alpha, std::size_t dim,
                                      double tail_tol = kDefaultTailTol) {
    require_same_dim(gdag.dim(), dim, "deformed_exponential");
    if (j >= dim)
        throw std::out_of_range("deformed_exponential: seed outside dimension");

    FockState term = basis_state(j, dim);
    std::vector<cplx> sum(dim, cplx{});
    sum[j] = 1.0;
    bool converged = false;
    for (std::size_t k = 1; k <= kTaylorTermCap; ++k) {
        term = scale(alpha / static_cast<double>(k), apply_raising(gdag, term));
        for (std::size_t n = 0; n < dim; ++n) sum[n] += term[n];
        double sum_sq = 0.0;
        for (const cplx& c : sum) sum_sq += std::norm(c);
        if (!std::isfinite(sum_sq)) break;
        if (norm_squared(term) <= kSeriesTol * kSeriesTol * sum_sq) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw convergence_error("deformed_exponential: no convergence within " +
                                std::to_string(kTaylorTermCap) + " terms");

    FockState out(std::move(sum), term.truncation_loss());
    detail::require_loss(out, tail_tol, "deformed_exponential");
    return normalize(out);
}

/// |alpha,-m> by the exponential route e^{alpha G†}|0> with
/// G† = a† (1+n_hat)/(1+m+n_hat); the diagonal factor is evaluated at the
/// pre-raise occupation, matching a† standing to the left of the
/// n_hat-function.
inline FockState negative_m_exponential(cplx alpha, unsigned m, std::size_t dim,
                                        double tail_tol = kDefaultTailTol) {
    detail::require_tail(std::abs(alpha), -static_cast<int>(m), dim, tail_tol,
                         "negative_m_exponential");
    RaisingOperator g;
    g.step = 1;
    g.coeff.resize(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        const double nn = static_cast<double>(n);
        g.coeff[n] = std::sqrt(nn + 1.0) * (1.0 + nn) /
                     (1.0 + static_cast<double>(m) + nn);
    }
    return deformed_exponential(g, 0, alpha, dim, tail_tol);
}

/// Default construction route for a family label: the series expansions for
/// the added and negative families, the defining series for coherent.
inline FockState make_state(const StateFamily& family, std::size_t dim,
                            double tail_tol = kDefaultTailTol) {
    switch (family.kind) {
        case StateKind::coherent:
            return coherent(family.alpha, dim, tail_tol);
        case StateKind::photon_added:
            return photon_added_series(family.alpha, family.m, dim, tail_tol);
        case StateKind::negative_m:
            return negative_m_series(family.alpha, family.m, dim, tail_tol);
    }
    throw std::logic_error("make_state: unknown state kind");
}

/// Signed-m encoding of a family for choose_dim and f_weight: the
/// photon-added family keeps +m, the negative family flips the sign,
/// coherent is the undeformed m = 0.
inline int signed_m(const StateFamily& family) {
    switch (family.kind) {
        case StateKind::coherent:
            return 0;
        case StateKind::photon_added:
            return static_cast<int>(family.m);
        case StateKind::negative_m:
            return -static_cast<int>(family.m);
    }
    throw std::logic_error("signed_m: unknown state kind");
}

/// Analytic normalization constant N of the negative-m expansion,
/// N = m! / sqrt(2F2(1,1;m+1,m+1;|alpha|^2)); the numeric vector norm is
/// the production normalization, this is its cross-check.
inline double negative_m_norm_constant(double alpha_abs, unsigned m) {
    const SeriesResult f = hyper2f2_11mm(m, alpha_abs * alpha_abs);
    if (!f.converged)
        throw convergence_error("negative_m_norm_constant: 2F2 series did not converge");
    return std::exp(log_factorial(m) - 0.5 * std::log(f.value));
}

}  // namespace nlcs
