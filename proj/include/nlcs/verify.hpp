#pragma once

// The self-verification suite: eigenvalue residuals for every construction
// route, route-equivalence fidelities, annihilation and sector structure,
// commutator residuals, analytic-vs-vector moment cross-checks, the
// Heisenberg bound, and the alpha -> 0 / m -> 0 limits.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "nlcs/observables.hpp"
#include "nlcs/operators.hpp"
#include "nlcs/states.hpp"

namespace nlcs {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const VerifyCheck& c) { return c.passed; });
    }
};

struct VerifyOptions {
    std::vector<double> alphas = {0.5, 1.0, 2.0, 4.0};
    std::vector<unsigned> ms = {1, 2, 5, 10};
    // Verification-grade truncation: eigenvalue residuals see the edge
    // amplitude directly, so the tail must sit well below the residual
    // tolerance squared.
    TruncationPolicy policy{1e-19, 512};
    // Self-test hook: added to every f(n,m) weight in the eigenvalue checks,
    // so a deliberately corrupted run must fail them.
    double f_weight_corruption = 0.0;
};

namespace detail {

inline double corrupted_eigen_residual(int m, const FockState& s, cplx alpha,
                                       double corruption) {
    DiagonalOperator f = f_weight(m, s.dim());
    for (cplx& w : f.weight) w += corruption;
    return distance(apply_diagonal(f, apply_annihilation(s)), scale(alpha, s));
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt = {}) {
    VerifyReport report;
    const auto push = [&report](const std::string& name, double residual, double tol) {
        report.checks.push_back({name, residual <= tol, residual, tol});
    };

    // Route constructions over the grid, reused by several checks.
    struct GridPoint {
        double alpha;
        unsigned m;
        FockState added_series, added_operator;
        FockState neg_series, neg_inverse, neg_exponential;
    };
    std::vector<GridPoint> grid;
    for (double a : opt.alphas) {
        for (unsigned m : opt.ms) {
            const cplx alpha{a, 0.0};
            const std::size_t dim_add = choose_dim(alpha, static_cast<int>(m), opt.policy);
            const std::size_t dim_neg = choose_dim(alpha, -static_cast<int>(m), opt.policy);
            const double tol = opt.policy.tail_tol;
            grid.push_back({a, m,
                            photon_added_series(alpha, m, dim_add, tol),
                            photon_added_operator(alpha, m, dim_add, tol),
                            negative_m_series(alpha, m, dim_neg, tol),
                            negative_m_inverse_ops(alpha, m, dim_neg, tol),
                            negative_m_exponential(alpha, m, dim_neg, tol)});
        }
    }

    // Eigenvalue relation f(n,m) a |psi> = alpha |psi>, per family and route.
    const double eigen_tol = 1e-8;
    double r_add_series = 0, r_add_op = 0, r_neg_series = 0, r_neg_inv = 0, r_neg_exp = 0;
    for (const auto& g : grid) {
        const cplx alpha{g.alpha, 0.0};
        const int mp = static_cast<int>(g.m);
        const double c = opt.f_weight_corruption;
        r_add_series = std::max(r_add_series,
                                detail::corrupted_eigen_residual(mp, g.added_series, alpha, c));
        r_add_op = std::max(r_add_op,
                            detail::corrupted_eigen_residual(mp, g.added_operator, alpha, c));
        r_neg_series = std::max(r_neg_series,
                                detail::corrupted_eigen_residual(-mp, g.neg_series, alpha, c));
        r_neg_inv = std::max(r_neg_inv,
                             detail::corrupted_eigen_residual(-mp, g.neg_inverse, alpha, c));
        r_neg_exp = std::max(r_neg_exp,
                             detail::corrupted_eigen_residual(-mp, g.neg_exponential, alpha, c));
    }
    push("eigen-residual added series", r_add_series, eigen_tol);
    push("eigen-residual added operator", r_add_op, eigen_tol);
    push("eigen-residual negative series", r_neg_series, eigen_tol);
    push("eigen-residual negative inverse-ops", r_neg_inv, eigen_tol);
    push("eigen-residual negative exponential", r_neg_exp, eigen_tol);

    // Route equivalence as fidelity deficits.
    const double fid_tol = 1e-10;
    double d_add = 0, d_neg_si = 0, d_neg_se = 0, d_neg_ie = 0;
    for (const auto& g : grid) {
        d_add = std::max(d_add, 1.0 - fidelity(g.added_series, g.added_operator));
        d_neg_si = std::max(d_neg_si, 1.0 - fidelity(g.neg_series, g.neg_inverse));
        d_neg_se = std::max(d_neg_se, 1.0 - fidelity(g.neg_series, g.neg_exponential));
        d_neg_ie = std::max(d_neg_ie, 1.0 - fidelity(g.neg_inverse, g.neg_exponential));
    }
    push("route-fidelity added series~operator", d_add, fid_tol);
    push("route-fidelity negative series~inverse-ops", d_neg_si, fid_tol);
    push("route-fidelity negative series~exponential", d_neg_se, fid_tol);
    push("route-fidelity negative inverse-ops~exponential", d_neg_ie, fid_tol);

    // Annihilation structure: A_m kills exactly {0, m}.
    {
        const std::size_t dim = 64;
        double mismatches = 0;
        for (int m = 1; m <= 10; ++m) {
            const auto killed = annihilated_states(m, dim);
            const std::vector<std::size_t> expected = {0, static_cast<std::size_t>(m)};
            if (killed != expected) mismatches += 1;
        }
        push("annihilated-states m=1..10", mismatches, 0.0);
    }

    // Sector structure: S_0 = {0..m-1} finite, S_m climbs to the edge.
    {
        const std::size_t dim = 64;
        double mismatches = 0;
        for (int m = 1; m <= 10; ++m) {
            const Sector s0 = build_sector(0, m, dim);
            const Sector sm = build_sector(static_cast<std::size_t>(m), m, dim);
            if (!s0.finite || s0.members.size() != static_cast<std::size_t>(m))
                mismatches += 1;
            if (sm.finite || sm.members.back() != dim - 1) mismatches += 1;
        }
        push("sector-structure m=1..10", mismatches, 0.0);
    }

    // [A, G†] = 1 on the infinite sector S_m.
    {
        const std::size_t dim = 64;
        double worst = 0;
        for (int m = 1; m <= 10; ++m) {
            const Sector sm = build_sector(static_cast<std::size_t>(m), m, dim);
            worst = std::max(worst, commutator_residual(m, sm));
        }
        push("commutator-residual S_m", worst, 1e-12);
    }

    // Analytic series moments against vector moments, negative family.
    {
        double worst = 0;
        for (const auto& g : grid) {
            const ObservableReport va = analytic_moments_negative_m({g.alpha, 0.0}, g.m);
            const ObservableReport vv = moments(g.neg_series);
            const auto dev = [](double x, double y) {
                return std::abs(x - y) / std::max(1.0, std::abs(y));
            };
            double q_dev = 0.0;
            if (va.mandel_q && vv.mandel_q)
                q_dev = dev(*va.mandel_q, *vv.mandel_q);
            else if (va.mandel_q.has_value() != vv.mandel_q.has_value())
                q_dev = 1.0;
            worst = std::max({worst, std::abs(va.mean_a - vv.mean_a),
                              std::abs(va.mean_a2 - vv.mean_a2),
                              dev(va.mean_n, vv.mean_n), dev(va.mean_n2, vv.mean_n2),
                              dev(va.var_x, vv.var_x), dev(va.var_p, vv.var_p), q_dev});
        }
        push("moment-cross-check negative", worst, 1e-9);
    }

    // Heisenberg bound Var(x) Var(p) >= 1/4 on every constructed state.
    {
        double worst = 0;
        for (const auto& g : grid) {
            for (const FockState* s : {&g.added_series, &g.added_operator, &g.neg_series,
                                       &g.neg_inverse, &g.neg_exponential}) {
                const ObservableReport rep = moments(*s);
                worst = std::max(worst, 0.25 - rep.var_x * rep.var_p);
            }
        }
        push("heisenberg-bound", std::max(0.0, worst), 1e-10);
    }

    // alpha -> 0: |alpha,m> -> |m>, |alpha,-m> -> |0>.
    {
        const cplx tiny{1e-6, 0.0};
        double d_added = 0, d_neg = 0;
        for (unsigned m : opt.ms) {
            const std::size_t dim_add = choose_dim(tiny, static_cast<int>(m), opt.policy);
            const std::size_t dim_neg = choose_dim(tiny, -static_cast<int>(m), opt.policy);
            d_added = std::max(d_added,
                               1.0 - fidelity(photon_added_series(tiny, m, dim_add,
                                                                  opt.policy.tail_tol),
                                              basis_state(m, dim_add)));
            d_neg = std::max(d_neg,
                             1.0 - fidelity(negative_m_series(tiny, m, dim_neg,
                                                              opt.policy.tail_tol),
                                            basis_state(0, dim_neg)));
        }
        push("limit added alpha->0", d_added, 1e-10);
        push("limit negative alpha->0", d_neg, 1e-10);
    }

    // m = 0: both families reduce to the coherent state.
    {
        double worst = 0;
        for (double a : opt.alphas) {
            const cplx alpha{a, 0.0};
            const std::size_t dim = choose_dim(alpha, 0, opt.policy);
            const FockState coh = coherent(alpha, dim, opt.policy.tail_tol);
            worst = std::max(worst,
                             1.0 - fidelity(photon_added_series(alpha, 0, dim,
                                                                opt.policy.tail_tol),
                                            coh));
            worst = std::max(worst,
                             1.0 - fidelity(negative_m_series(alpha, 0, dim,
                                                              opt.policy.tail_tol),
                                            coh));
        }
        push("limit m=0 coherent", worst, 1e-12);
    }

    return report;
}

}  // namespace nlcs
