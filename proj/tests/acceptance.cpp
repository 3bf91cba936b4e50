// Acceptance suite: one check per numbered criterion, each printed as a
// single pass/fail line. Run with no arguments for all criteria or with a
// list of criterion numbers. Exit status is nonzero if any selected
// criterion fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nlcs/commands.hpp"
#include "nlcs/io.hpp"
#include "nlcs/observables.hpp"
#include "nlcs/operators.hpp"
#include "nlcs/states.hpp"
#include "nlcs/sweeps.hpp"

using namespace nlcs;

namespace {

const std::vector<double> kAlphas = {0.5, 1.0, 2.0, 4.0};
const std::vector<unsigned> kMs = {1, 2, 5, 10};
const TruncationPolicy kPolicy{1e-19, 512};

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::size_t dim_added(double a, unsigned m) {
    return choose_dim(cplx{a, 0.0}, static_cast<int>(m), kPolicy);
}
std::size_t dim_negative(double a, unsigned m) {
    return choose_dim(cplx{a, 0.0}, -static_cast<int>(m), kPolicy);
}

// 1. Eigenvalue relation f(n,m) a |psi> = alpha |psi> on the grid, every
//    construction route, residual below 1e-8.
Outcome criterion1() {
    Outcome out;
    double worst = 0.0;
    for (double a : kAlphas) {
        for (unsigned m : kMs) {
            const cplx alpha{a, 0.0};
            const int mi = static_cast<int>(m);
            const std::size_t da = dim_added(a, m);
            const std::size_t dn = dim_negative(a, m);
            const double t = kPolicy.tail_tol;
            const FockState routes[5] = {photon_added_series(alpha, m, da, t),
                                         photon_added_operator(alpha, m, da, t),
                                         negative_m_series(alpha, m, dn, t),
                                         negative_m_inverse_ops(alpha, m, dn, t),
                                         negative_m_exponential(alpha, m, dn, t)};
            const int signs[5] = {mi, mi, -mi, -mi, -mi};
            for (int r = 0; r < 5; ++r)
                worst = std::max(worst,
                                 nonlinear_eigen_residual(signs[r], routes[r], alpha));
        }
    }
    out.require(worst < 1e-8, "max residual " + fmt(worst) + " >= 1e-8");
    if (out.passed) out.detail = "max residual " + fmt(worst);
    return out;
}

// 2. Route equivalence: pairwise fidelity >= 1 - 1e-10 on the grid.
Outcome criterion2() {
    Outcome out;
    double worst = 0.0;
    for (double a : kAlphas) {
        for (unsigned m : kMs) {
            const cplx alpha{a, 0.0};
            const std::size_t da = dim_added(a, m);
            const std::size_t dn = dim_negative(a, m);
            const double t = kPolicy.tail_tol;
            const FockState s1 = photon_added_series(alpha, m, da, t);
            const FockState s2 = photon_added_operator(alpha, m, da, t);
            const FockState n1 = negative_m_series(alpha, m, dn, t);
            const FockState n2 = negative_m_inverse_ops(alpha, m, dn, t);
            const FockState n3 = negative_m_exponential(alpha, m, dn, t);
            worst = std::max({worst, 1.0 - fidelity(s1, s2), 1.0 - fidelity(n1, n2),
                              1.0 - fidelity(n1, n3), 1.0 - fidelity(n2, n3)});
        }
    }
    out.require(worst < 1e-10, "max fidelity deficit " + fmt(worst) + " >= 1e-10");
    if (out.passed) out.detail = "max fidelity deficit " + fmt(worst);
    return out;
}

// 3. Annihilation structure: A_m kills exactly {0, m}; S_0 has m members and
//    is finite; S_m reaches the truncation edge; commutator residual on S_m
//    below 1e-12.
Outcome criterion3() {
    Outcome out;
    const std::size_t dim = 64;
    double worst_comm = 0.0;
    for (int m = 1; m <= 10; ++m) {
        const auto killed = annihilated_states(m, dim);
        out.require(killed == std::vector<std::size_t>{0, static_cast<std::size_t>(m)},
                    "annihilated_states(" + std::to_string(m) + ") != {0, m}");
        const Sector s0 = build_sector(0, m, dim);
        out.require(s0.finite && s0.members.size() == static_cast<std::size_t>(m),
                    "S_0 structure wrong for m=" + std::to_string(m));
        const Sector sm = build_sector(static_cast<std::size_t>(m), m, dim);
        out.require(!sm.finite && sm.members.back() == dim - 1,
                    "S_m does not reach the edge for m=" + std::to_string(m));
        worst_comm = std::max(worst_comm, commutator_residual(m, sm));
    }
    out.require(worst_comm < 1e-12,
                "max commutator residual " + fmt(worst_comm) + " >= 1e-12");
    if (out.passed) out.detail = "max commutator residual " + fmt(worst_comm);
    return out;
}

// 4. Limits: |alpha,m> -> |m> and |alpha,-m> -> |0> at alpha = 1e-6; both
//    families reduce to the coherent state at m = 0.
Outcome criterion4() {
    Outcome out;
    const cplx tiny{1e-6, 0.0};
    double worst_limit = 0.0;
    for (unsigned m : kMs) {
        const std::size_t da = choose_dim(tiny, static_cast<int>(m), kPolicy);
        const std::size_t dn = choose_dim(tiny, -static_cast<int>(m), kPolicy);
        worst_limit = std::max(
            worst_limit, 1.0 - fidelity(photon_added_series(tiny, m, da, kPolicy.tail_tol),
                                        basis_state(m, da)));
        worst_limit = std::max(
            worst_limit, 1.0 - fidelity(negative_m_series(tiny, m, dn, kPolicy.tail_tol),
                                        basis_state(0, dn)));
    }
    out.require(worst_limit < 1e-10,
                "alpha->0 fidelity deficit " + fmt(worst_limit) + " >= 1e-10");

    double worst_m0 = 0.0;
    for (double a : kAlphas) {
        const cplx alpha{a, 0.0};
        const std::size_t d = choose_dim(alpha, 0, kPolicy);
        const FockState coh = coherent(alpha, d, kPolicy.tail_tol);
        worst_m0 = std::max(
            worst_m0, 1.0 - fidelity(photon_added_series(alpha, 0, d, kPolicy.tail_tol), coh));
        worst_m0 = std::max(
            worst_m0, 1.0 - fidelity(negative_m_series(alpha, 0, d, kPolicy.tail_tol), coh));
    }
    out.require(worst_m0 < 1e-12, "m=0 fidelity deficit " + fmt(worst_m0) + " >= 1e-12");
    if (out.passed)
        out.detail = "limit deficits " + fmt(worst_limit) + " / " + fmt(worst_m0);
    return out;
}

// 5. Fig. 1 properties on the default grid: Var(p) < 1/2 on (0,4] for the
//    negative family; exactly 1/2 at alpha = 0; within 0.05 of 1/2 at
//    alpha = 4; |alpha,m> has Var(p) = m + 1/2 at alpha = 1e-6.
Outcome criterion5() {
    Outcome out;
    const std::vector<unsigned> ms = {1, 5, 10};
    const TruncationPolicy policy{1e-12, 512};
    const auto rows =
        variance_sweep(StateKind::negative_m, ms, {0.0, 4.0, 0.05}, 0.0, policy);
    bool squeezed = true;
    for (const auto& r : rows) {
        if (r.alpha == 0.0) {
            out.require(std::abs(r.var_p - 0.5) <= 1e-9,
                        "Var(p) at alpha=0 off vacuum for m=" + std::to_string(r.m));
        } else if (!(r.var_p < 0.5)) {
            squeezed = false;
        }
        if (std::abs(r.alpha - 4.0) < 1e-12 && std::abs(r.var_p - 0.5) > 0.05)
            out.require(false, "Var(p) at alpha=4, m=" + std::to_string(r.m) + " is " +
                                   fmt(r.var_p) + " (|.-1/2| = " +
                                   fmt(std::abs(r.var_p - 0.5)) + " > 0.05)");
    }
    out.require(squeezed, "Var(p) >= 1/2 somewhere on (0,4]");

    for (unsigned m : ms) {
        const cplx tiny{1e-6, 0.0};
        const std::size_t d = choose_dim(tiny, static_cast<int>(m), kPolicy);
        const ObservableReport rep =
            moments(photon_added_series(tiny, m, d, kPolicy.tail_tol));
        out.require(std::abs(rep.var_p - (m + 0.5)) <= 1e-6,
                    "Var(p) of |alpha,m> at alpha=1e-6, m=" + std::to_string(m) +
                        " off m+1/2 by " + fmt(std::abs(rep.var_p - (m + 0.5))));
    }
    if (out.passed) out.detail = "squeezing properties hold on the grid";
    return out;
}

// 6. Phase symmetry: Var(x) of the imaginary-alpha sweep equals Var(p) of
//    the real-alpha sweep row by row to 1e-10.
Outcome criterion6() {
    Outcome out;
    const std::vector<unsigned> ms = {1, 5, 10};
    const TruncationPolicy policy{1e-12, 512};
    const AlphaGrid grid{0.0, 4.0, 0.05};
    const double half_pi = std::acos(-1.0) / 2.0;
    const auto real_rows = variance_sweep(StateKind::negative_m, ms, grid, 0.0, policy);
    const auto imag_rows = variance_sweep(StateKind::negative_m, ms, grid, half_pi, policy);
    double worst = 0.0;
    for (std::size_t i = 0; i < real_rows.size(); ++i)
        worst = std::max(worst, std::abs(imag_rows[i].var_x - real_rows[i].var_p));
    out.require(worst <= 1e-10, "max row deviation " + fmt(worst) + " > 1e-10");
    if (out.passed) out.detail = "max row deviation " + fmt(worst);
    return out;
}

// 7. Fig. 2 properties: q > 0 for the negative family on (0,5]; |q| below
//    0.15 at |alpha| = 0.05 and 5; q < 0 for the added family; q = 0 for
//    coherent states.
Outcome criterion7() {
    Outcome out;
    const std::vector<unsigned> ms = {1, 5, 10};
    const TruncationPolicy policy{1e-12, 512};
    const AlphaGrid grid{0.0, 5.0, 0.05};
    const auto neg = mandel_sweep(StateKind::negative_m, ms, grid, 0.0, policy);
    bool super = true;
    for (const auto& r : neg) {
        if (r.abs_alpha == 0.0) continue;
        if (!r.mandel_q || !(*r.mandel_q > 0.0)) super = false;
        const bool endpoint = std::abs(r.abs_alpha - 0.05) < 1e-12 ||
                              std::abs(r.abs_alpha - 5.0) < 1e-12;
        if (endpoint && r.mandel_q && std::abs(*r.mandel_q) > 0.15)
            out.require(false, "q at |alpha|=" + fmt(r.abs_alpha) + ", m=" +
                                   std::to_string(r.m) + " is " + fmt(*r.mandel_q) +
                                   " (> 0.15)");
    }
    out.require(super, "q <= 0 somewhere for the negative family");

    const auto added = mandel_sweep(StateKind::photon_added, ms, grid, 0.0, policy);
    bool sub = true;
    for (const auto& r : added) {
        if (r.abs_alpha == 0.0) continue;
        if (!r.mandel_q || !(*r.mandel_q < 0.0)) sub = false;
    }
    out.require(sub, "q >= 0 somewhere for the added family");

    for (double a : {0.5, 1.0, 2.0, 5.0}) {
        const std::size_t d = choose_dim(cplx{a, 0.0}, 0, kPolicy);
        const auto q = mandel_q(coherent(cplx{a, 0.0}, d, kPolicy.tail_tol));
        out.require(q.has_value() && std::abs(*q) <= 1e-9,
                    "coherent q at alpha=" + fmt(a) + " not 0 within 1e-9");
    }
    if (out.passed) out.detail = "photon statistics hold on the grid";
    return out;
}

// 8. Normalization: N from the 2F2 series matches the numeric coefficient
//    norm to 1e-10 relative on the grid.
Outcome criterion8() {
    Outcome out;
    double worst = 0.0;
    for (double a : kAlphas) {
        for (unsigned m : kMs) {
            long double norm_sq = 0.0L;
            for (int n = 0; n < 600; ++n) {
                const long double lu = n * std::log((long double)a) +
                                       0.5L * std::lgammal(n + 1.0L) -
                                       std::lgammal(n + m + 1.0L);
                norm_sq += std::exp(2.0L * lu);
            }
            const double numeric = 1.0 / std::sqrt(static_cast<double>(norm_sq));
            const double analytic = negative_m_norm_constant(a, m);
            worst = std::max(worst, std::abs(analytic - numeric) / numeric);
        }
    }
    out.require(worst < 1e-10, "max relative deviation " + fmt(worst) + " >= 1e-10");
    if (out.passed) out.detail = "max relative deviation " + fmt(worst);
    return out;
}

// 9. Moment cross-check: analytic series moments equal vector moments to
//    1e-9 on the grid, every field.
Outcome criterion9() {
    Outcome out;
    double worst = 0.0;
    for (double a : kAlphas) {
        for (unsigned m : kMs) {
            const cplx alpha{a, 0.0};
            const ObservableReport va = analytic_moments_negative_m(alpha, m);
            const ObservableReport vv = moments(negative_m_series(
                alpha, m, dim_negative(a, m), kPolicy.tail_tol));
            const auto dev = [](double x, double y) {
                return std::abs(x - y) / std::max(1.0, std::abs(y));
            };
            worst = std::max({worst, std::abs(va.mean_a - vv.mean_a),
                              std::abs(va.mean_a2 - vv.mean_a2),
                              dev(va.mean_n, vv.mean_n), dev(va.mean_n2, vv.mean_n2),
                              dev(va.var_x, vv.var_x), dev(va.var_p, vv.var_p),
                              dev(va.mandel_q.value(), vv.mandel_q.value())});
        }
    }
    out.require(worst < 1e-9, "max field deviation " + fmt(worst) + " >= 1e-9");
    if (out.passed) out.detail = "max field deviation " + fmt(worst);
    return out;
}

// 10. Photon distribution: |<n|alpha,-m>|^2 equals the closed form
//     N^2 |alpha|^{2n} n!/((n+m)!)^2 at (alpha=2, m=3) for n <= 30; the
//     m = 0 member is Poissonian with mean |alpha|^2.
Outcome criterion10() {
    Outcome out;
    const double a = 2.0;
    const unsigned m = 3;
    const std::size_t dim = std::max<std::size_t>(dim_negative(a, m), 32);
    const auto p = photon_distribution(negative_m_series(cplx{a, 0.0}, m, dim,
                                                         kPolicy.tail_tol));
    const double N = negative_m_norm_constant(a, m);
    double worst = 0.0;
    for (std::size_t n = 0; n <= 30 && n < p.size(); ++n) {
        const double closed =
            N * N * std::exp(2.0 * double(n) * std::log(a) + log_factorial(n) -
                             2.0 * log_factorial(n + m));
        worst = std::max(worst, std::abs(p[n] - closed));
    }
    out.require(worst < 1e-10, "closed-form deviation " + fmt(worst) + " >= 1e-10");

    const std::size_t dc = choose_dim(cplx{a, 0.0}, 0, kPolicy);
    const auto pc = photon_distribution(negative_m_series(cplx{a, 0.0}, 0, dc,
                                                          kPolicy.tail_tol));
    const double x = a * a;
    double worst_pois = 0.0;
    double mean = 0.0;
    for (std::size_t n = 0; n < pc.size(); ++n) {
        const double pois = std::exp(-x + double(n) * std::log(x) - log_factorial(n));
        worst_pois = std::max(worst_pois, std::abs(pc[n] - pois));
        mean += double(n) * pc[n];
    }
    out.require(worst_pois < 1e-10,
                "m=0 Poisson deviation " + fmt(worst_pois) + " >= 1e-10");
    out.require(std::abs(mean - x) < 1e-9, "m=0 mean " + fmt(mean) + " != |alpha|^2");
    if (out.passed)
        out.detail = "closed-form deviation " + fmt(worst) + ", Poisson deviation " +
                     fmt(worst_pois);
    return out;
}

// 11. Determinism: identical fig1 specs give byte-identical files.
Outcome criterion11() {
    Outcome out;
    SweepSpec spec = default_fig1_spec();
    const std::string payload1 = render_fig1(spec);
    const std::string payload2 = render_fig1(spec);
    out.require(payload1 == payload2, "in-process renders differ");

    const std::string path1 = "acceptance_fig1_a.csv";
    const std::string path2 = "acceptance_fig1_b.csv";
    spec.output_path = path1;
    run_fig1(spec);
    spec.output_path = path2;
    run_fig1(spec);
    const auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string f1 = slurp(path1);
    const std::string f2 = slurp(path2);
    out.require(!f1.empty() && f1 == f2, "written files differ or are empty");
    std::remove(path1.c_str());
    std::remove(path2.c_str());
    if (out.passed) out.detail = std::to_string(payload1.size()) + " bytes, identical";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using CriterionFn = Outcome (*)();
    const std::vector<std::pair<const char*, CriterionFn>> criteria = {
        {"eigenvalue relation, both families, all routes", criterion1},
        {"route equivalence fidelities", criterion2},
        {"annihilation and sector structure, commutator", criterion3},
        {"alpha->0 and m->0 limits", criterion4},
        {"fig1 squeezing properties", criterion5},
        {"phase symmetry of the quadrature variances", criterion6},
        {"fig2 photon statistics properties", criterion7},
        {"analytic normalization constant", criterion8},
        {"analytic vs vector moments", criterion9},
        {"photon distribution closed forms", criterion10},
        {"fig1 byte determinism", criterion11},
    };

    std::set<std::size_t> selected;
    for (int i = 1; i < argc; ++i) {
        const long v = std::strtol(argv[i], nullptr, 10);
        if (v < 1 || v > static_cast<long>(criteria.size())) {
            std::cerr << "usage: acceptance [criterion numbers 1.."
                      << criteria.size() << "]\n";
            return 2;
        }
        selected.insert(static_cast<std::size_t>(v));
    }
    if (selected.empty())
        for (std::size_t i = 1; i <= criteria.size(); ++i) selected.insert(i);

    bool all_passed = true;
    for (std::size_t i : selected) {
        Outcome out;
        try {
            out = criteria[i - 1].second();
        } catch (const std::exception& e) {
            out.passed = false;
            out.detail = std::string("exception: ") + e.what();
        }
        all_passed = all_passed && out.passed;
        std::printf("[%s] criterion %2zu: %s%s%s\n", out.passed ? "PASS" : "FAIL", i,
                    criteria[i - 1].first, out.detail.empty() ? "" : ": ",
                    out.detail.c_str());
    }
    return all_passed ? 0 : 1;
}
