#pragma once

// The two special functions the state normalizations need (Laguerre
// polynomials and the 2F2(1,1;m+1,m+1;x) series), plus log-factorial support.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nlcs {

inline constexpr double kSeriesTol = 1e-16;        // relative term cutoff
inline constexpr std::size_t kSeriesTermCap = 10000;

/// ln(n!). Cumulative table for small n, lgamma beyond it. The table is
/// built once on first use and read-only afterwards.
inline double log_factorial(std::size_t n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(4096, 0.0);
        long double acc = 0.0L;
        for (std::size_t k = 1; k < t.size(); ++k) {
            acc += std::log(static_cast<long double>(k));
            t[k] = static_cast<double>(acc);
        }
        return t;
    }();
    if (n < table.size()) return table[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

/// Laguerre polynomial of order m as the finite sum
///   L_m(x) = sum_{n=0}^{m} (-x)^n m! / ((n!)^2 (m-n)!),
/// with terms generated by their ratio t_{n+1}/t_n = -x (m-n)/(n+1)^2.
/// For x <= 0 every term is positive and the sum has no cancellation.
inline double laguerre(unsigned m, double x) {
    double term = 1.0;
    double sum = 1.0;
    for (unsigned n = 0; n < m; ++n) {
        term *= -x * static_cast<double>(m - n) /
                (static_cast<double>(n + 1) * static_cast<double>(n + 1));
        sum += term;
    }
    return sum;
}

struct SeriesResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    bool converged = false;
};

/// 2F2(1,1;m+1,m+1;x) = sum_{n>=0} x^n n! (m!)^2 / ((n+m)!)^2 for m >= 1,
/// x >= 0. Terms follow the ratio x (n+1)/(n+m+1)^2; summation stops when
/// the relative term drops below kSeriesTol or the term cap is reached.
inline SeriesResult hyper2f2_11mm(unsigned m, double x) {
    if (m < 1) throw std::invalid_argument("hyper2f2_11mm: m must be >= 1");
    if (x < 0.0) throw std::invalid_argument("hyper2f2_11mm: x must be >= 0");

    double term = 1.0;
    double sum = 1.0;
    std::size_t used = 1;
    for (std::size_t n = 0; used < kSeriesTermCap; ++n) {
        const double np1 = static_cast<double>(n + 1);
        const double den = static_cast<double>(n + m + 1);
        term *= x * np1 / (den * den);
        sum += term;
        ++used;
        if (!std::isfinite(sum)) break;
        if (term <= kSeriesTol * sum) return {sum, used, true};
    }
    return {sum, used, false};
}

}  // namespace nlcs
