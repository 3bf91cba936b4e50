#pragma once

// Truncated Fock-space linear algebra: state vectors, ladder and inverse
// ladder operators, diagonal operators, inner products, and the truncation
// policy that decides how many levels a state family needs.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlcs/errors.hpp"

namespace nlcs {

using cplx = std::complex<double>;

// A state counts as normalized when |sum |c_n|^2 - 1| <= kNormTol.
inline constexpr double kNormTol = 1e-10;

struct TruncationPolicy {
    double tail_tol = 1e-12;     // max probability mass above the edge
    std::size_t max_dim = 512;

    bool valid() const { return tail_tol > 0.0 && tail_tol < 1.0 && max_dim >= 2; }
};

/// Complex amplitudes over the number states |0> .. |dim-1>. Immutable after
/// construction. truncation_loss() accumulates the squared magnitude of every
/// amplitude the producing operations dropped at the truncation edge.
class FockState {
public:
    explicit FockState(std::size_t dim) : amps_(check_dim(dim)) {}

    explicit FockState(std::vector<cplx> amplitudes, double truncation_loss = 0.0)
        : amps_(std::move(amplitudes)), loss_(truncation_loss) {
        check_dim(amps_.size());
    }

    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx operator[](std::size_t n) const { return amps_[n]; }
    cplx amplitude(std::size_t n) const { return amps_.at(n); }
    double truncation_loss() const { return loss_; }

private:
    static std::size_t check_dim(std::size_t dim) {
        if (dim == 0) throw std::invalid_argument("FockState: dim must be >= 1");
        return dim;
    }

    std::vector<cplx> amps_;
    double loss_ = 0.0;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw dimension_mismatch(std::string(what) + ": dimension mismatch (" +
                                 std::to_string(a) + " vs " + std::to_string(b) + ")");
}

/// |n> in a dim-level space.
inline FockState basis_state(std::size_t n, std::size_t dim) {
    if (n >= dim)
        throw std::out_of_range("basis_state: occupation " + std::to_string(n) +
                                " outside dimension " + std::to_string(dim));
    std::vector<cplx> amps(dim, cplx{});
    amps[n] = 1.0;
    return FockState(std::move(amps));
}

inline double norm_squared(const FockState& s) {
    double acc = 0.0;
    for (const cplx& c : s.amplitudes()) acc += std::norm(c);
    return acc;
}

inline double norm(const FockState& s) { return std::sqrt(norm_squared(s)); }

/// <a|b>, conjugate-linear in the first argument.
inline cplx inner_product(const FockState& a, const FockState& b) {
    require_same_dim(a.dim(), b.dim(), "inner_product");
    cplx acc{};
    for (std::size_t n = 0; n < a.dim(); ++n) acc += std::conj(a[n]) * b[n];
    return acc;
}

/// |<a|b>|^2 for unit-norm a, b (norms divided out for robustness).
inline double fidelity(const FockState& a, const FockState& b) {
    return std::norm(inner_product(a, b)) / (norm_squared(a) * norm_squared(b));
}

/// a|s>: c'_n = sqrt(n+1) c_{n+1}; not renormalized.
inline FockState apply_annihilation(const FockState& s) {
    const std::size_t dim = s.dim();
    std::vector<cplx> out(dim, cplx{});
    for (std::size_t n = 0; n + 1 < dim; ++n)
        out[n] = std::sqrt(static_cast<double>(n + 1)) * s[n + 1];
    return FockState(std::move(out), s.truncation_loss());
}

/// a†|s>: c'_{n+1} = sqrt(n+1) c_n. The amplitude that would land on |dim>
/// is dropped and its squared magnitude added to the truncation loss.
inline FockState apply_creation(const FockState& s) {
    const std::size_t dim = s.dim();
    std::vector<cplx> out(dim, cplx{});
    double loss = s.truncation_loss();
    for (std::size_t n = 0; n < dim; ++n) {
        const cplx v = std::sqrt(static_cast<double>(n + 1)) * s[n];
        if (n + 1 < dim)
            out[n + 1] = v;
        else
            loss += std::norm(v);
    }
    return FockState(std::move(out), loss);
}

/// a^{-1}|s>: c'_{n+1} = c_n / sqrt(n+1); the top amplitude is dropped into
/// the truncation loss.
inline FockState apply_annihilation_inverse(const FockState& s) {
    const std::size_t dim = s.dim();
    std::vector<cplx> out(dim, cplx{});
    double loss = s.truncation_loss();
    for (std::size_t n = 0; n < dim; ++n) {
        const cplx v = s[n] / std::sqrt(static_cast<double>(n + 1));
        if (n + 1 < dim)
            out[n + 1] = v;
        else
            loss += std::norm(v);
    }
    return FockState(std::move(out), loss);
}

/// a†^{-1}|s>: c'_{n-1} = c_n / sqrt(n) for n >= 1; the vacuum component is
/// annihilated (maps to nothing, no loss).
inline FockState apply_creation_inverse(const FockState& s) {
    const std::size_t dim = s.dim();
    std::vector<cplx> out(dim, cplx{});
    for (std::size_t n = 1; n < dim; ++n)
        out[n - 1] = s[n] / std::sqrt(static_cast<double>(n));
    return FockState(std::move(out), s.truncation_loss());
}

/// An operator diagonal in the number basis: one weight per occupation.
struct DiagonalOperator {
    std::vector<cplx> weight;

    std::size_t dim() const { return weight.size(); }

    static DiagonalOperator identity(std::size_t dim) {
        DiagonalOperator op;
        op.weight.assign(dim, cplx{1.0, 0.0});
        return op;
    }

    static DiagonalOperator from_function(std::size_t dim,
                                          const std::function<cplx(std::size_t)>& fn) {
        DiagonalOperator op;
        op.weight.resize(dim);
        for (std::size_t n = 0; n < dim; ++n) op.weight[n] = fn(n);
        return op;
    }
};

inline FockState apply_diagonal(const DiagonalOperator& op, const FockState& s) {
    require_same_dim(op.dim(), s.dim(), "apply_diagonal");
    std::vector<cplx> out(s.dim());
    for (std::size_t n = 0; n < s.dim(); ++n) out[n] = op.weight[n] * s[n];
    return FockState(std::move(out), s.truncation_loss());
}

inline FockState scale(cplx factor, const FockState& s) {
    std::vector<cplx> out(s.dim());
    for (std::size_t n = 0; n < s.dim(); ++n) out[n] = factor * s[n];
    return FockState(std::move(out), std::norm(factor) * s.truncation_loss());
}

inline FockState sub(const FockState& a, const FockState& b) {
    require_same_dim(a.dim(), b.dim(), "sub");
    std::vector<cplx> out(a.dim());
    for (std::size_t n = 0; n < a.dim(); ++n) out[n] = a[n] - b[n];
    return FockState(std::move(out), a.truncation_loss() + b.truncation_loss());
}

/// || a - b ||
inline double distance(const FockState& a, const FockState& b) {
    require_same_dim(a.dim(), b.dim(), "distance");
    double acc = 0.0;
    for (std::size_t n = 0; n < a.dim(); ++n) acc += std::norm(a[n] - b[n]);
    return std::sqrt(acc);
}

/// s / ||s||. A zero vector signals a state annihilated by the construction
/// that produced it and is rejected rather than mapped to the vacuum.
inline FockState normalize(const FockState& s) {
    const double nrm = norm(s);
    if (nrm == 0.0) throw degenerate_state("normalize: zero vector");
    std::vector<cplx> out(s.dim());
    for (std::size_t n = 0; n < s.dim(); ++n) out[n] = s[n] / nrm;
    return FockState(std::move(out), s.truncation_loss());
}

/// Fraction of the state's squared norm that has been lost to truncation.
inline double lost_fraction(const FockState& s) {
    const double kept = norm_squared(s);
    const double lost = s.truncation_loss();
    if (lost == 0.0) return 0.0;
    return lost / (kept + lost);
}

namespace detail {

// Log-space scan of the relative photon-number weights of a state family.
// m >= 1 selects the photon-added family (support starts at level m),
// m == 0 the coherent state, m < 0 the |alpha,-|m|> family. lw[k] is
// ln w(offset + k) up to a common constant.
struct WeightScan {
    std::vector<double> lw;
    std::size_t offset = 0;   // first occupied level
    bool complete = false;    // decay stop reached, remainder negligible
};

inline WeightScan scan_family_weights(double alpha_abs, int m, std::size_t max_terms) {
    WeightScan scan;
    const double x = alpha_abs * alpha_abs;
    scan.offset = (m > 0) ? static_cast<std::size_t>(m) : 0;
    scan.lw.push_back(0.0);
    if (x == 0.0) {  // single occupied level
        scan.complete = true;
        return scan;
    }
    const double mm = static_cast<double>(m > 0 ? m : -m);
    double lw = 0.0;
    double lw_max = 0.0;
    const double lx = std::log(x);
    for (std::size_t k = 0; k + 1 < max_terms; ++k) {
        const double kp1 = static_cast<double>(k + 1);
        double lratio;
        if (m > 0)      // x (m+k+1) / (k+1)^2
            lratio = lx + std::log(mm + kp1) - 2.0 * std::log(kp1);
        else if (m < 0) // x (k+1) / (k+|m|+1)^2
            lratio = lx + std::log(kp1) - 2.0 * std::log(kp1 + mm);
        else            // x / (k+1)
            lratio = lx - std::log(kp1);
        lw += lratio;
        scan.lw.push_back(lw);
        if (lw > lw_max) lw_max = lw;
        // Past the peak and 230 nats down, the remaining tail is below
        // 1e-99 of the total; stop.
        if (lratio < 0.0 && lw < lw_max - 230.0) {
            scan.complete = true;
            break;
        }
    }
    return scan;
}

}  // namespace detail

/// Probability mass of the (m, alpha) family at levels >= dim, as a fraction
/// of its total mass. Family selection as in choose_dim. Returns +inf when
/// the weight scan cannot certify the remainder.
inline double tail_fraction(double alpha_abs, int m, std::size_t dim) {
    if (dim == 0) return 1.0;
    const std::size_t scan_cap = 20 * std::max<std::size_t>(dim, 512) + 4096;
    const auto scan = detail::scan_family_weights(alpha_abs, m, scan_cap);
    if (!scan.complete) return std::numeric_limits<double>::infinity();

    double lw_max = scan.lw[0];
    for (double v : scan.lw) lw_max = std::max(lw_max, v);

    double total = 0.0;
    double tail = 0.0;
    for (std::size_t k = 0; k < scan.lw.size(); ++k) {
        const double w = std::exp(scan.lw[k] - lw_max);
        total += w;
        if (scan.offset + k >= dim) tail += w;
    }
    if (scan.offset >= dim) return 1.0;  // entire support above the edge
    return tail / total;
}

/// Smallest dimension D <= policy.max_dim whose tail mass is below
/// policy.tail_tol for the (alpha, m) family: m >= 1 photon-added, m == 0
/// coherent, m < 0 the negative family of order |m|.
inline std::size_t choose_dim(cplx alpha, int m, const TruncationPolicy& policy) {
    if (!policy.valid())
        throw std::invalid_argument("choose_dim: invalid truncation policy");
    const double alpha_abs = std::abs(alpha);
    const std::size_t scan_cap = 20 * std::max<std::size_t>(policy.max_dim, 512) + 4096;
    const auto scan = detail::scan_family_weights(alpha_abs, m, scan_cap);

    double lw_max = scan.lw[0];
    for (double v : scan.lw) lw_max = std::max(lw_max, v);
    // Suffix sums accumulated smallest-first so tiny tails keep precision.
    std::vector<double> suffix(scan.lw.size() + 1, 0.0);
    for (std::size_t k = scan.lw.size(); k-- > 0;)
        suffix[k] = suffix[k + 1] + std::exp(scan.lw[k] - lw_max);
    const double total = suffix[0];

    if (scan.complete) {
        for (std::size_t d = 1; d <= policy.max_dim; ++d) {
            double tail;
            if (d <= scan.offset)
                tail = total;
            else if (d - scan.offset < suffix.size())
                tail = suffix[d - scan.offset];
            else
                tail = 0.0;
            if (tail / total < policy.tail_tol) return d;
        }
    }
    const double achieved = tail_fraction(alpha_abs, m, policy.max_dim);
    throw truncation_error(
        "choose_dim: no dimension <= " + std::to_string(policy.max_dim) +
            " reaches tail tolerance " + std::to_string(policy.tail_tol),
        achieved);
}

}  // namespace nlcs
