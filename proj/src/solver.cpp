#include "specarb/solver.hpp"

#include <algorithm>

#include "specarb/polygcd.hpp"

namespace specarb {

namespace {

std::vector<MultiPoly> power_table(const MultiPoly& base, int max_exp) {
    std::vector<MultiPoly> pw;
    pw.reserve(static_cast<std::size_t>(max_exp) + 1);
    pw.push_back(MultiPoly::constant(base.context(), BigRational(1)));
    for (int k = 1; k <= max_exp; ++k) pw.push_back(pw.back() * base);
    return pw;
}

/// Substitute x_v := num/den into the equation polynomial f (read as f = 0)
/// and return the reduced numerator: with d = deg_v(f),
///     f' = sum_k f_k * num^k * den^(d-k)
/// is f's cleared-denominator image; dividing out gcd(f', den^d) mirrors a
/// fraction put over lowest terms, and the primitive part fixes a canonical
/// scale.  The reduction matters: it is what keeps later equations linear in
/// the remaining variables.
MultiPoly substitute_reduced(const MultiPoly& f, std::size_t v, const MultiPoly& num,
                             const MultiPoly& den) {
    const int d = f.degree_in(v);
    if (d <= 0) return f;
    const std::vector<MultiPoly> npow = power_table(num, d);
    const std::vector<MultiPoly> dpow = power_table(den, d);
    MultiPoly fp = MultiPoly::zero(f.context());
    for (int k = 0; k <= d; ++k) {
        MultiPoly fk = f.coeff_in(v, k);
        if (fk.is_zero()) continue;
        fp += fk * npow[static_cast<std::size_t>(k)] * dpow[static_cast<std::size_t>(d - k)];
    }
    if (fp.is_zero()) return fp;
    // Divide out gcd(f', den^d) one den-layer at a time: each pass strips
    // gcd(f', den), so after at most d passes every factor of den has been
    // removed up to its multiplicity in f', capped by d — the same factor
    // den^d could have contributed — while keeping both gcd operands small.
    if (!den.is_constant()) {
        for (int k = 0; k < d; ++k) {
            MultiPoly g = poly_gcd(fp, den);
            if (g.is_constant()) break;
            fp = exact_div(fp, g);
        }
    }
    return fp.primitive_part();
}

/// Substitute already-composed rational functions for the variables marked
/// in `have`, clearing denominators: the result is the exact rational
/// function p(x -> rf), reduced by the RationalFunction constructor.
RationalFunction subs_rational(const MultiPoly& p,
                               const std::array<RationalFunction, 8>& rf,
                               const std::array<bool, 8>& have) {
    std::array<int, 8> deg{};
    bool any = false;
    for (std::size_t v = 0; v < 8; ++v) {
        deg[v] = have[v] ? std::max(0, p.degree_in(v)) : 0;
        any = any || deg[v] > 0;
    }
    if (!any) return RationalFunction::from_poly(p);

    std::array<std::vector<MultiPoly>, 8> npow, dpow;
    for (std::size_t v = 0; v < 8; ++v) {
        if (deg[v] == 0) continue;
        npow[v] = power_table(rf[v].num(), deg[v]);
        dpow[v] = power_table(rf[v].den(), deg[v]);
    }
    MultiPoly numerator = MultiPoly::zero(p.context());
    for (const auto& t : p.terms()) {
        Mono rest = t.mono;
        for (std::size_t v = 0; v < 8; ++v) {
            if (deg[v] == 0) continue;
            rest.deg -= rest.e[v];
            rest.e[v] = 0;
        }
        MultiPoly m = MultiPoly::from_terms(p.context(), {{rest, t.coeff}});
        for (std::size_t v = 0; v < 8; ++v) {
            if (deg[v] == 0) continue;
            const int e = t.mono.e[v];
            m = m * npow[v][static_cast<std::size_t>(e)] *
                dpow[v][static_cast<std::size_t>(deg[v] - e)];
        }
        numerator += m;
    }
    // The cleared denominator is a product of known small factors.  Cancel
    // each factor out of the numerator by exact division while it divides,
    // so the constructor's final gcd only ever sees the small residue — the
    // expanded product would make that gcd intractable.
    std::vector<std::pair<MultiPoly, int>> factors;
    for (std::size_t v = 0; v < 8; ++v) {
        if (deg[v] == 0 || rf[v].den().is_constant()) continue;
        factors.emplace_back(rf[v].den(), deg[v]);
    }
    for (auto& [f, e] : factors) {
        while (e > 0) {
            auto q = try_exact_div(numerator, f);
            if (!q) break;
            numerator = std::move(*q);
            --e;
        }
    }
    MultiPoly denominator = MultiPoly::constant(p.context(), BigRational(1));
    for (const auto& [f, e] : factors) {
        if (e > 0) denominator *= f.pow(static_cast<unsigned>(e));
    }
    return RationalFunction(std::move(numerator), std::move(denominator));
}

}  // namespace

SolutionMap solve_symbolic(const SymbolicPhi& phi) {
    const ContextPtr mixed = ctx_mixed();
    const ContextPtr tau = ctx_tau8();

    // Equations coefficient_i - tau_i = 0 over {x1..x8, tau0..tau7}; the tau
    // variables sit at indices 8..15.
    std::array<MultiPoly, 8> eqs;
    for (std::size_t i = 0; i < 8; ++i) {
        eqs[i] = phi.phi[i].convert_context(mixed) - MultiPoly::variable(mixed, 8 + i);
    }

    struct Step {
        int eq;         // which equation was consumed
        int var;        // which x-variable it solved (0-based)
        MultiPoly num;  // x_var = num / den over the mixed context
        MultiPoly den;
    };
    std::vector<Step> steps;
    std::array<bool, 8> eq_used{}, var_solved{};

    for (int round = 0; round < 8; ++round) {
        bool found = false;
        for (int i = 7; i >= 0 && !found; --i) {
            if (eq_used[static_cast<std::size_t>(i)]) continue;
            for (std::size_t v = 0; v < 8 && !found; ++v) {
                if (var_solved[v]) continue;
                if (eqs[static_cast<std::size_t>(i)].degree_in(v) != 1) continue;
                MultiPoly a = eqs[static_cast<std::size_t>(i)].coeff_in(v, 1);
                if (a.is_zero()) continue;  // defensive; degree == 1 implies nonzero
                MultiPoly b = eqs[static_cast<std::size_t>(i)].coeff_in(v, 0);
                steps.push_back({i, static_cast<int>(v), -b, std::move(a)});
                eq_used[static_cast<std::size_t>(i)] = true;
                var_solved[v] = true;
                found = true;
                for (std::size_t j = 0; j < 8; ++j) {
                    if (eq_used[j]) continue;
                    eqs[j] = substitute_reduced(eqs[j], v, steps.back().num, steps.back().den);
                }
            }
        }
        if (!found) {
            throw NotTriangular("round " + std::to_string(round + 1) +
                                ": no remaining equation is linear in an unsolved variable");
        }
    }

    // Compose in reverse solving order: each step's num/den may mention only
    // variables solved later, so by the time we reach it those have final
    // tau-only expressions.
    std::array<RationalFunction, 8> composed;
    std::array<bool, 8> have{};
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        RationalFunction n = subs_rational(it->num, composed, have);
        RationalFunction d = subs_rational(it->den, composed, have);
        composed[static_cast<std::size_t>(it->var)] = n / d;
        have[static_cast<std::size_t>(it->var)] = true;
    }

    SolutionMap out;
    out.tau_ctx = tau;
    for (std::size_t v = 0; v < 8; ++v) {
        // Conversion fails loudly if any x-variable survived composition.
        MultiPoly n = composed[v].num().convert_context(tau);
        MultiPoly d = composed[v].den().convert_context(tau);
        out.x[v] = RationalFunction(std::move(n), std::move(d));
    }
    out.order.reserve(steps.size());
    for (const Step& s : steps) out.order.emplace_back(s.eq, s.var + 1);
    return out;
}

bool check_back_substitution(const SymbolicPhi& phi, const SolutionMap& s) {
    const ContextPtr tau = s.tau_ctx;
    // Cleared-denominator identity, one coefficient at a time:
    //   sum_t c_t prod_v n_v^{e_v} d_v^{A_v - e_v}  ==  tau_i prod_v d_v^{A_v}
    // with A_v = deg_v(coefficient polynomial).  Pure polynomial equality —
    // no gcd or rational-function arithmetic involved.
    for (std::size_t i = 0; i < 8; ++i) {
        const MultiPoly& f = phi.phi[i];
        std::array<int, 8> A{};
        std::array<std::vector<MultiPoly>, 8> npow, dpow;
        for (std::size_t v = 0; v < 8; ++v) {
            A[v] = std::max(0, f.degree_in(v));
            npow[v] = power_table(s.x[v].num(), A[v]);
            dpow[v] = power_table(s.x[v].den(), A[v]);
        }
        MultiPoly lhs = MultiPoly::zero(tau);
        for (const auto& t : f.terms()) {
            MultiPoly m = MultiPoly::constant(tau, t.coeff);
            for (std::size_t v = 0; v < 8; ++v) {
                const int e = t.mono.e[v];
                m = m * npow[v][static_cast<std::size_t>(e)] *
                    dpow[v][static_cast<std::size_t>(A[v] - e)];
            }
            lhs += m;
        }
        MultiPoly rhs = MultiPoly::variable(tau, i);
        for (std::size_t v = 0; v < 8; ++v) rhs *= dpow[v][static_cast<std::size_t>(A[v])];
        if (lhs != rhs) return false;
    }
    return true;
}

PiPolynomial build_pi(const SolutionMap& s) {
    PiPolynomial out;
    out.provenance.reserve(16);
    for (std::size_t v = 0; v < 8; ++v) {
        out.provenance.push_back(s.x[v].num());
        out.provenance.push_back(s.x[v].den());
    }
    out.pi = poly_lcm(out.provenance);
    return out;
}

const SolutionMap& solution_map() {
    static const SolutionMap cached = solve_symbolic(phi_symbolic());
    return cached;
}

const PiPolynomial& pi_polynomial() {
    static const PiPolynomial cached = build_pi(solution_map());
    return cached;
}

}  // namespace specarb
