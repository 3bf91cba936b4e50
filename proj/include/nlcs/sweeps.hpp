#pragma once

// Grid sweeps over (alpha, m): quadrature variances and Mandel q per grid
// point, each point truncated independently via choose_dim. Rows come out in
// grid order, so output is deterministic.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nlcs/observables.hpp"
#include "nlcs/states.hpp"

namespace nlcs {

/// Closed uniform grid r = min, min+step, ..., max.
struct AlphaGrid {
    double min = 0.0;
    double max = 4.0;
    double step = 0.05;

    void validate() const {
        if (!(step > 0.0) || !(min <= max))
            throw std::invalid_argument("AlphaGrid: need step > 0 and min <= max");
    }

    std::size_t count() const {
        validate();
        return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    }

    double value(std::size_t i) const { return min + static_cast<double>(i) * step; }
};

/// r e^{i phase}, with cos/sin snapped to exact zero below double
/// resolution so axis-aligned phases stay axis-aligned.
inline cplx alpha_on_ray(double r, double phase) {
    double c = std::cos(phase);
    double s = std::sin(phase);
    if (std::abs(c) < 1e-15) c = 0.0;
    if (std::abs(s) < 1e-15) s = 0.0;
    return {r * c, r * s};
}

struct VarianceRow {
    unsigned m = 0;
    double alpha = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    std::size_t dim_used = 0;
};

struct MandelRow {
    unsigned m = 0;
    double abs_alpha = 0.0;
    std::optional<double> mandel_q;
    std::size_t dim_used = 0;
};

namespace detail {

// Coherent sweeps carry the single forced m = 0; the deformed families use
// the caller's list.
inline std::vector<unsigned> effective_ms(StateKind kind, const std::vector<unsigned>& ms) {
    if (kind == StateKind::coherent) return {0};
    if (ms.empty()) throw std::invalid_argument("sweep: m list must be nonempty");
    return ms;
}

inline ObservableReport sweep_point(StateKind kind, unsigned m, double r, double phase,
                                    const TruncationPolicy& policy, std::size_t& dim_used) {
    const StateFamily family(kind, alpha_on_ray(r, phase), m);
    dim_used = choose_dim(family.alpha, signed_m(family), policy);
    return moments(make_state(family, dim_used, policy.tail_tol));
}

}  // namespace detail

inline std::vector<VarianceRow> variance_sweep(StateKind kind,
                                               const std::vector<unsigned>& ms,
                                               const AlphaGrid& grid, double phase,
                                               const TruncationPolicy& policy) {
    grid.validate();
    std::vector<VarianceRow> rows;
    for (unsigned m : detail::effective_ms(kind, ms)) {
        for (std::size_t i = 0; i < grid.count(); ++i) {
            const double r = grid.value(i);
            std::size_t dim_used = 0;
            const ObservableReport rep = detail::sweep_point(kind, m, r, phase, policy, dim_used);
            rows.push_back({m, r, rep.var_x, rep.var_p, dim_used});
        }
    }
    return rows;
}

inline std::vector<MandelRow> mandel_sweep(StateKind kind,
                                           const std::vector<unsigned>& ms,
                                           const AlphaGrid& grid, double phase,
                                           const TruncationPolicy& policy) {
    grid.validate();
    std::vector<MandelRow> rows;
    for (unsigned m : detail::effective_ms(kind, ms)) {
        for (std::size_t i = 0; i < grid.count(); ++i) {
            const double r = grid.value(i);
            std::size_t dim_used = 0;
            const ObservableReport rep = detail::sweep_point(kind, m, r, phase, policy, dim_used);
            rows.push_back({m, r, rep.mandel_q, dim_used});
        }
    }
    return rows;
}

}  // namespace nlcs
