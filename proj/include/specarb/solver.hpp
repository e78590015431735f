#pragma once

#include <string>
#include <variant>
#include <vector>

#include "specarb/pattern_s.hpp"
#include "specarb/ratfunc.hpp"

namespace specarb {

/// The eight parameters solved as reduced rational functions of the target
/// coefficients tau0..tau7, plus an audit trail of the elimination: which
/// equation (by coefficient index) was solved for which variable (1..8), in
/// order.
struct SolutionMap {
    ContextPtr tau_ctx;
    std::array<RationalFunction, 8> x;           // x[i] is x_{i+1}(tau)
    std::vector<std::pair<int, int>> order;      // (equation index, variable 1..8)
};

/// The certificate polynomial pi over {tau0..tau7}: the LCM of all 16 solved
/// numerators and denominators (leading coefficient 1), together with those
/// contributors.  Nonvanishing of pi at a coefficient vector certifies that
/// the vector is realizable.
struct PiPolynomial {
    MultiPoly pi;
    std::vector<MultiPoly> provenance;
};

/// Triangular elimination on the system "coefficient_i = tau_i": repeatedly
/// take the first equation (scanning index 7 down to 0) that is linear in an
/// unsolved variable (scanning x1..x8), solve, and substitute with reduction
/// everywhere.  Throws NotTriangular if no linear step exists at some round.
SolutionMap solve_symbolic(const SymbolicPhi& phi);

/// Exact check of the defining identity: substituting the map into every
/// coefficient polynomial yields tau_i, verified as a cleared-denominator
/// polynomial identity.
bool check_back_substitution(const SymbolicPhi& phi, const SolutionMap& s);

PiPolynomial build_pi(const SolutionMap& s);

/// Cached one-time builds (thread-safe initialization).
const SolutionMap& solution_map();
const PiPolynomial& pi_polynomial();

/// Definite negative answer from a realization attempt.
struct Unrealizable {
    std::string reason;
};

template <class F>
using RealizeOutcome = std::variant<XParams<F>, Unrealizable>;

/// Evaluate the solution map at concrete coefficients tau0..tau7.  Fails —
/// with the culprit named — when a denominator vanishes or a parameter would
/// be zero; on success the parameters reproduce t^8 + sum tau_i t^i as the
/// characteristic polynomial.
template <class F>
RealizeOutcome<F> realize_coeffs(const std::array<F, 8>& tau) {
    const SolutionMap& s = solution_map();
    const std::vector<F> point(tau.begin(), tau.end());
    XParams<F> out;
    for (int i = 0; i < 8; ++i) {
        const auto& rf = s.x[static_cast<std::size_t>(i)];
        F den = rf.den().template evaluate<F>(point);
        if (FieldOps<F>::is_zero(den)) {
            return Unrealizable{"denominator of x" + std::to_string(i + 1) +
                                " vanishes at the given coefficients"};
        }
        F num = rf.num().template evaluate<F>(point);
        if (FieldOps<F>::is_zero(num)) {
            return Unrealizable{"numerator of x" + std::to_string(i + 1) +
                                " vanishes (the parameter would be zero)"};
        }
        out.x[static_cast<std::size_t>(i)] = num / den;
    }
    return out;
}

/// The realizability certificate of a spectrum: pi evaluated at the signed
/// elementary symmetric values, tau_{8-k} = s_k = (-1)^k e_k(sigma).
template <class F>
F psi(const std::vector<F>& sigma) {
    if (sigma.size() != 8) {
        throw WrongArity("psi needs exactly 8 spectrum values, got " +
                         std::to_string(sigma.size()));
    }
    std::array<F, 9> e;
    e.fill(FieldOps<F>::zero());
    e[0] = FieldOps<F>::one();
    for (const F& v : sigma) {
        for (int k = 8; k >= 1; --k) e[static_cast<std::size_t>(k)] =
            e[static_cast<std::size_t>(k)] + v * e[static_cast<std::size_t>(k - 1)];
    }
    std::vector<F> point(8, FieldOps<F>::zero());
    for (int k = 1; k <= 8; ++k) {
        F sk = (k % 2 == 1) ? FieldOps<F>::zero() - e[static_cast<std::size_t>(k)]
                            : e[static_cast<std::size_t>(k)];
        point[static_cast<std::size_t>(8 - k)] = sk;
    }
    return pi_polynomial().pi.template evaluate<F>(point);
}

/// Realize an 8-element spectrum on the 8x8 pattern.  Uses the solved map
/// via Vieta's formulas; constant spectra fall back to the dedicated
/// witnesses ((t-c)^8 via scaling, t^8 via the nilpotent parameters), which
/// keeps this total on constant multisets.
template <class F>
RealizeOutcome<F> realize_spectrum_S(const std::vector<F>& sigma) {
    if (sigma.size() != 8) {
        throw WrongArity("spectrum realization needs exactly 8 values, got " +
                         std::to_string(sigma.size()));
    }
    const MonicPoly<F> target = MonicPoly<F>::from_roots(sigma);
    std::array<F, 8> tau;
    for (int j = 0; j < 8; ++j) tau[static_cast<std::size_t>(j)] = target.coeff(j);
    RealizeOutcome<F> r = realize_coeffs<F>(tau);
    if (std::holds_alternative<XParams<F>>(r)) return r;

    bool constant = true;
    for (const F& v : sigma) {
        if (!FieldOps<F>::equal(v, sigma[0])) {
            constant = false;
            break;
        }
    }
    if (!constant) return r;
    if (FieldOps<F>::is_zero(sigma[0])) return convert_params<F>(witness_nilpotent());
    return scale_realization(convert_params<F>(witness_all_ones_spectrum()), sigma[0]);
}

}  // namespace specarb
