#pragma once

// The deformed-operator algebra: the weight f(n,m), A = f(n_hat,m) a and its
// adjoint, detection of annihilated number states, sector construction, and
// the Shanta synthesis of generalized raising operators.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlcs/fock.hpp"

namespace nlcs {

/// Deformation weight f(n,m) = 1 - m/(1+n) as a diagonal operator. A single
/// signed m covers both families: m > 0 gives the photon-added deformation
/// (which vanishes at n = m-1), m < 0 gives 1 + |m|/(1+n), which never
/// vanishes. m = 0 is the identity.
inline DiagonalOperator f_weight(int m, std::size_t dim) {
    DiagonalOperator op;
    op.weight.resize(dim);
    for (std::size_t n = 0; n < dim; ++n)
        op.weight[n] = 1.0 - static_cast<double>(m) / static_cast<double>(n + 1);
    return op;
}

/// A|s> with A = f(n_hat,m) a: annihilation first, the diagonal after.
inline FockState apply_A(int m, const FockState& s) {
    return apply_diagonal(f_weight(m, s.dim()), apply_annihilation(s));
}

/// A†|s> with A† = a† f(n_hat,m): the diagonal first, creation after.
inline FockState apply_A_dagger(int m, const FockState& s) {
    return apply_creation(apply_diagonal(f_weight(m, s.dim()), s));
}

/// ||A_m |s> - alpha |s>||, the residual of the nonlinear eigenvalue
/// relation both state families are built to satisfy.
inline double nonlinear_eigen_residual(int m, const FockState& s, cplx alpha) {
    return distance(apply_A(m, s), scale(alpha, s));
}

/// All occupation numbers n < dim with A_m |n> = 0 exactly. For m >= 1 this
/// is {0, m}; for m <= 0 only the vacuum.
inline std::vector<std::size_t> annihilated_states(int m, std::size_t dim) {
    if (m > 0 && static_cast<std::size_t>(m) >= dim)
        throw std::invalid_argument("annihilated_states: dim must exceed m");
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < dim; ++n)
        if (norm_squared(apply_A(m, basis_state(n, dim))) == 0.0) out.push_back(n);
    return out;
}

/// The set of number states reachable from a seed by repeated application
/// of A†. finite means the climb ended on a state A† annihilates; otherwise
/// the climb reached the truncation edge and the sector is infinite within
/// this truncation.
struct Sector {
    std::size_t seed = 0;
    std::vector<std::size_t> members;
    bool finite = false;
    std::size_t dim = 0;
};

inline Sector build_sector(std::size_t seed, int m, std::size_t dim) {
    if (seed >= dim) throw std::out_of_range("build_sector: seed outside dimension");
    Sector sector{seed, {seed}, false, dim};
    std::size_t n = seed;
    while (n + 1 < dim) {
        if (norm_squared(apply_A_dagger(m, basis_state(n, dim))) == 0.0) {
            sector.finite = true;
            return sector;
        }
        sector.members.push_back(++n);
    }
    return sector;
}

/// A generalized raising operator: G†|n> = coeff[n] |n+step>. Amplitude
/// raised past the truncation edge is dropped into the truncation loss,
/// matching the plain ladder operators.
struct RaisingOperator {
    std::size_t step = 1;
    std::vector<double> coeff;

    std::size_t dim() const { return coeff.size(); }
};

inline FockState apply_raising(const RaisingOperator& g, const FockState& s) {
    require_same_dim(g.dim(), s.dim(), "apply_raising");
    const std::size_t dim = s.dim();
    std::vector<cplx> out(dim, cplx{});
    double loss = s.truncation_loss();
    for (std::size_t n = 0; n < dim; ++n) {
        const cplx v = g.coeff[n] * s[n];
        if (n + g.step < dim)
            out[n + g.step] = v;
        else
            loss += std::norm(v);
    }
    return FockState(std::move(out), loss);
}

/// Plain a† as a RaisingOperator.
inline RaisingOperator creation_raising(std::size_t dim) {
    RaisingOperator g;
    g.step = 1;
    g.coeff.resize(dim);
    for (std::size_t n = 0; n < dim; ++n)
        g.coeff[n] = std::sqrt(static_cast<double>(n + 1));
    return g;
}

/// Shanta synthesis G† = (1/p) A† (A A†)^{-1} (n_hat + p - j) for
/// A = f(n_hat,m) a^p. On |n> the chain collapses to
///   g(n) = (n + p - j) / (p f(n) sqrt((n+1)(n+2)...(n+p))),
/// the A A† spectrum f(n)^2 (n+1)...(n+p) being inverted as an exact
/// diagonal reciprocal. A zero of f on the sector climbed from |j> makes
/// A A† singular there and is rejected.
inline RaisingOperator shanta_g_dagger(int m, unsigned p, std::size_t j, std::size_t dim) {
    if (p < 1) throw std::invalid_argument("shanta_g_dagger: p must be >= 1");
    if (j >= dim) throw std::out_of_range("shanta_g_dagger: seed outside dimension");

    const auto f_of = [m](std::size_t n) {
        return 1.0 - static_cast<double>(m) / static_cast<double>(n + 1);
    };
    for (std::size_t n = j; n < dim; n += p) {
        if (f_of(n) == 0.0)
            throw std::domain_error(
                "shanta_g_dagger: A A† has zero eigenvalue at occupation " +
                std::to_string(n) + " inside the sector of " + std::to_string(j));
    }

    RaisingOperator g;
    g.step = p;
    g.coeff.assign(dim, 0.0);
    for (std::size_t n = 0; n < dim; ++n) {
        const double f = f_of(n);
        if (f == 0.0) continue;  // outside the usable sector; never applied there
        double prod = 1.0;
        for (unsigned k = 1; k <= p; ++k) prod *= static_cast<double>(n + k);
        g.coeff[n] = (static_cast<double>(n) + static_cast<double>(p) -
                      static_cast<double>(j)) /
                     (static_cast<double>(p) * f * std::sqrt(prod));
    }
    return g;
}

/// Max over the sector's members, excluding the top two truncation-edge
/// states, of ||(A G† - G† A - 1)|n>||, with G† synthesized at p = 1 for
/// the sector's seed.
inline double commutator_residual(int m, const Sector& sector) {
    if (sector.finite)
        throw std::invalid_argument("commutator_residual: sector must be infinite");
    const RaisingOperator g = shanta_g_dagger(m, 1, sector.seed, sector.dim);
    double worst = 0.0;
    for (std::size_t i = 0; i + 2 < sector.members.size(); ++i) {
        const FockState ket = basis_state(sector.members[i], sector.dim);
        const FockState lhs = apply_A(m, apply_raising(g, ket));
        const FockState rhs = apply_raising(g, apply_A(m, ket));
        const double r = distance(sub(lhs, rhs), ket);
        if (r > worst) worst = r;
    }
    return worst;
}

}  // namespace nlcs
