#include "specarb/polygcd.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace specarb {

namespace {

/// Largest variable index with a positive exponent anywhere, or -1 for a
/// constant.  Recursion always peels variables from the back of the context.
int top_var(const MultiPoly& p) {
    int best = -1;
    for (const auto& t : p.terms()) {
        for (int v = static_cast<int>(VariableContext::kMaxVars) - 1; v > best; --v) {
            if (t.mono.e[v] != 0) {
                best = v;
                break;
            }
        }
    }
    return best;
}

MultiPoly gcd_primitive(MultiPoly a, MultiPoly b);

/// Content of p viewed as a univariate polynomial in v: the gcd of its
/// v-coefficients, integer-primitive with positive leading coefficient.
/// Stops early once the running gcd collapses to a constant.
MultiPoly content_wrt(const MultiPoly& p, std::size_t v) {
    MultiPoly acc;
    for (int k = p.degree_in(v); k >= 0; --k) {
        MultiPoly c = p.coeff_in(v, k);
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c.primitive_part() : gcd_primitive(std::move(acc), std::move(c));
        if (acc.is_constant()) break;
    }
    return acc;
}

/// Exact pseudo-remainder lc(B)^(dA-dB+1) * A mod B with respect to v.
/// The loop may shed more than one degree per step; the final power of
/// lc(B) restores the exact pseudo-division normalization that the
/// subresultant divisions rely on.
MultiPoly prem(const MultiPoly& A, const MultiPoly& B, std::size_t v) {
    const int dB = B.degree_in(v);
    const MultiPoly lcB = B.coeff_in(v, dB);
    MultiPoly R = A;
    int steps_left = A.degree_in(v) - dB + 1;
    while (!R.is_zero() && R.degree_in(v) >= dB) {
        const int dR = R.degree_in(v);
        MultiPoly lcR = R.coeff_in(v, dR);
        Mono shift;
        shift.e[v] = static_cast<std::uint16_t>(dR - dB);
        shift.deg = static_cast<std::uint32_t>(dR - dB);
        R = lcB * R - (lcR * B).mul_term(shift, BigRational(1));
        --steps_left;
    }
    for (; steps_left > 0; --steps_left) R = R * lcB;
    return R;
}

/// Subresultant PRS (Knuth 4.6.1C / Brown–Traub) on polynomials that are
/// primitive with respect to v; returns their gcd's v-part, primitive.
MultiPoly subresultant_gcd(MultiPoly A, MultiPoly B, std::size_t v) {
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    const ContextPtr ctx = A.context();
    MultiPoly g = MultiPoly::constant(ctx, BigRational(1));
    MultiPoly h = g;
    while (true) {
        const int delta = A.degree_in(v) - B.degree_in(v);
        MultiPoly R = prem(A, B, v);
        if (R.is_zero()) {
            MultiPoly cont = content_wrt(B, v);
            return exact_div(B, cont).primitive_part();
        }
        if (R.degree_in(v) == 0) {
            // The last nonzero "remainder" is free of v, so the v-parts of
            // the primitive inputs are coprime.
            return MultiPoly::constant(ctx, BigRational(1));
        }
        A = B;
        B = exact_div(R, g * h.pow(static_cast<unsigned>(delta)));
        g = A.coeff_in(v, A.degree_in(v));
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_div(g.pow(static_cast<unsigned>(delta)),
                          h.pow(static_cast<unsigned>(delta - 1)));
        }
        // delta == 0 leaves h untouched.
    }
}

/// Necessary per-variable degree condition for q | p; gates the cheap
/// divisibility probes below.
bool degrees_compatible(const MultiPoly& q, const MultiPoly& p) {
    if (q.total_degree() > p.total_degree()) return false;
    for (std::size_t v = 0; v < VariableContext::kMaxVars; ++v) {
        if (q.degree_in(v) > p.degree_in(v)) return false;
    }
    return true;
}

// ---- heuristic gcd ----------------------------------------------------------
//
// Char–Geddes–Gonnet evaluation gcd: substitute a large integer xi for one
// variable, recurse on the (smaller) images, and lift the result back through
// its balanced xi-adic digits.  A candidate is accepted only if it divides
// both inputs exactly, so a failed lift merely costs a retry with a larger
// xi.  On the dense many-variable polynomials of the solver this replaces
// the subresultant remainder cascade — whose intermediate coefficients swell
// catastrophically — with a handful of big-integer gcds.

bool has_integer_coeffs(const MultiPoly& p) {
    for (const auto& t : p.terms()) {
        if (t.coeff.get_den() != 1) return false;
    }
    return true;
}

mpz_class max_abs_coeff(const MultiPoly& p) {
    mpz_class best(0);
    for (const auto& t : p.terms()) {
        mpz_class a = abs(t.coeff.get_num());
        if (a > best) best = a;
    }
    return best;
}

/// p with v := xi; same context, v eliminated.
MultiPoly eval_var_at_integer(const MultiPoly& p, std::size_t v, const mpz_class& xi) {
    const int d = std::max(0, p.degree_in(v));
    std::vector<mpz_class> pw(static_cast<std::size_t>(d) + 1);
    pw[0] = 1;
    for (int k = 1; k <= d; ++k) {
        pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * xi;
    }
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Mono m = t.mono;
        const std::uint16_t e = m.e[v];
        m.deg -= e;
        m.e[v] = 0;
        terms.push_back({m, t.coeff * BigRational(pw[e])});
    }
    return MultiPoly::from_terms(p.context(), std::move(terms));
}

/// Remainder of n modulo xi mapped into the balanced range [-xi/2, xi/2).
mpz_class balanced_mod(const mpz_class& n, const mpz_class& xi) {
    mpz_class r = n % xi;
    if (r < 0) r += xi;
    if (2 * r >= xi) r -= xi;
    return r;
}

/// Read g back off G's balanced xi-adic digits: G = sum_i digit_i * xi^i
/// with digit_i free of v becomes g = sum_i digit_i * v^i.  Fails when more
/// than max_deg+1 digits appear — the candidate cannot be a common divisor.
std::optional<MultiPoly> lift_xadic(const MultiPoly& G, std::size_t v, const mpz_class& xi,
                                    int max_deg) {
    std::vector<MultiPoly::Term> out;
    MultiPoly W = G;
    for (int i = 0; !W.is_zero(); ++i) {
        if (i > max_deg) return std::nullopt;
        std::vector<MultiPoly::Term> next;
        for (const auto& t : W.terms()) {
            const mpz_class c = t.coeff.get_num();
            mpz_class digit = balanced_mod(c, xi);
            if (digit != 0) {
                Mono m = t.mono;
                m.e[v] = static_cast<std::uint16_t>(i);
                m.deg += static_cast<std::uint32_t>(i);
                out.push_back({m, BigRational(digit)});
            }
            mpz_class rest = (c - digit) / xi;
            if (rest != 0) next.push_back({t.mono, BigRational(std::move(rest))});
        }
        W = MultiPoly::from_terms(W.context(), std::move(next));
    }
    if (out.empty()) return std::nullopt;
    return MultiPoly::from_terms(G.context(), std::move(out));
}

/// Recursive worker.  The returned gcd keeps its integer content: an inner
/// level's content is the xi-adic image of outer-variable structure, so
/// stripping it before the enclosing lift would silently truncate the gcd
/// (e.g. gcd(u*w^7, w^8) would collapse to 1).  Only the top-level wrapper
/// normalizes to a primitive polynomial.
std::optional<MultiPoly> heuristic_gcd_with_content(const MultiPoly& a, const MultiPoly& b) {
    const int v = std::max(top_var(a), top_var(b));
    if (v < 0) {
        mpz_class g = gcd(a.terms().front().coeff.get_num(), b.terms().front().coeff.get_num());
        return MultiPoly::constant(join_contexts(a.context(), b.context()), BigRational(g));
    }
    const int bound = std::min(std::max(0, a.degree_in(static_cast<std::size_t>(v))),
                               std::max(0, b.degree_in(static_cast<std::size_t>(v))));
    mpz_class xi = 2 * std::min(max_abs_coeff(a), max_abs_coeff(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt, xi = (xi * 73794) / 27011) {
        MultiPoly A = eval_var_at_integer(a, static_cast<std::size_t>(v), xi);
        MultiPoly B = eval_var_at_integer(b, static_cast<std::size_t>(v), xi);
        if (A.is_zero() || B.is_zero()) continue;
        std::optional<MultiPoly> G = heuristic_gcd_with_content(A, B);
        if (!G) return std::nullopt;
        std::optional<MultiPoly> g = lift_xadic(*G, static_cast<std::size_t>(v), xi, bound);
        if (!g) continue;
        // Structural check only — an integer content never obstructs exact
        // division over the rationals.
        if (try_exact_div(a, *g) && try_exact_div(b, *g)) return g;
    }
    return std::nullopt;
}

/// Heuristic gcd of two nonzero integer-coefficient polynomials, or nullopt
/// when the evaluation points keep misbehaving (callers fall back to the
/// subresultant scheme).  The result is integer-primitive with positive
/// leading coefficient and divides both inputs exactly.
std::optional<MultiPoly> heuristic_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (!has_integer_coeffs(a) || !has_integer_coeffs(b)) return std::nullopt;
    std::optional<MultiPoly> g = heuristic_gcd_with_content(a, b);
    if (!g) return std::nullopt;
    return g->primitive_part();
}

/// Gcd of two integer-primitive polynomials with positive leading
/// coefficients (either may be zero); result in the same normal form.
MultiPoly gcd_primitive(MultiPoly a, MultiPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ContextPtr ctx = join_contexts(a.context(), b.context());
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(ctx, BigRational(1));

    // Divisibility probes: in LCM folding one argument frequently divides
    // the other, and a failed probe exits at the first bad leading monomial.
    if (degrees_compatible(a, b) && try_exact_div(b, a)) return a;
    if (degrees_compatible(b, a) && try_exact_div(a, b)) return b;

    if (std::optional<MultiPoly> h = heuristic_gcd(a, b)) return *h;

    const int v = std::max(top_var(a), top_var(b));
    if (a.degree_in(v) == 0) return gcd_primitive(std::move(a), content_wrt(b, v));
    if (b.degree_in(v) == 0) return gcd_primitive(content_wrt(a, v), std::move(b));

    MultiPoly ca = content_wrt(a, v);
    MultiPoly cb = content_wrt(b, v);
    MultiPoly pa = exact_div(a, ca);
    MultiPoly pb = exact_div(b, cb);
    MultiPoly cont_gcd = gcd_primitive(std::move(ca), std::move(cb));
    MultiPoly part = subresultant_gcd(std::move(pa), std::move(pb), static_cast<std::size_t>(v));
    // Both factors are integer-primitive with positive leading coefficient;
    // by Gauss's lemma so is their product.
    return cont_gcd * part;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() && q.is_zero()) throw ZeroInput();
    return gcd_primitive(p, q).make_monic();
}

MultiPoly poly_lcm(const std::vector<MultiPoly>& ps) {
    if (ps.empty()) throw EmptyList();
    for (const auto& p : ps) {
        if (p.is_zero()) throw ZeroInput();
    }
    // Folding small-to-large keeps the running LCM's cofactors cheap.
    std::vector<MultiPoly> sorted = ps;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const MultiPoly& a, const MultiPoly& b) {
                         return a.num_terms() < b.num_terms();
                     });
    MultiPoly acc = sorted.front().primitive_part();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const MultiPoly p = sorted[i].primitive_part();
        MultiPoly g = poly_gcd(acc, p);
        acc = (acc * exact_div(p, g)).primitive_part();
    }
    return acc.make_monic();
}

}  // namespace specarb
