#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specarb/context.hpp"
#include "specarb/field.hpp"
#include "specarb/rational.hpp"

namespace specarb {

/// Exponent vector of a monomial, inline up to VariableContext::kMaxVars
/// variables, with the total degree cached for cheap graded comparisons.
struct Mono {
    std::array<std::uint16_t, VariableContext::kMaxVars> e{};
    std::uint32_t deg = 0;

    friend bool operator==(const Mono& a, const Mono& b) {
        return a.deg == b.deg && a.e == b.e;
    }
};

/// Graded-lexicographic comparison: higher total degree wins; ties go to the
/// monomial with the larger exponent in the earliest declared variable.
int grlex_cmp(const Mono& a, const Mono& b);

Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b (componentwise <=)
Mono mono_div(const Mono& b, const Mono& a);      // b / a, requires a | b

/// Sparse multivariate polynomial with exact rational coefficients over a
/// shared variable context.  Terms are kept in canonical form: sorted in
/// descending graded-lex order, no zero coefficients.  A default-constructed
/// value is the zero polynomial with no context; it absorbs the other
/// operand's context in arithmetic.
class MultiPoly {
  public:
    struct Term {
        Mono mono;
        BigRational coeff;
    };

    MultiPoly() = default;

    static MultiPoly zero(ContextPtr ctx) { return MultiPoly(std::move(ctx), {}); }
    static MultiPoly constant(ContextPtr ctx, BigRational c);
    static MultiPoly variable(ContextPtr ctx, std::size_t index);
    /// Canonicalizes (sorts, merges, drops zeros) an arbitrary term list.
    static MultiPoly from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0); }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Degree in one variable; -1 for the zero polynomial.
    int degree_in(std::size_t var) const;
    /// Max over terms of the weight-sum of exponents.  Throws ZeroPolynomial.
    long weighted_degree(const std::vector<long>& weights) const;

    /// Leading term under graded-lex; polynomial must be nonzero.
    const Term& leading_term() const;
    const BigRational& leading_coeff() const { return leading_term().coeff; }

    /// Coefficient of var^k, as a polynomial in the same context with the
    /// variable's exponent zeroed out.
    MultiPoly coeff_in(std::size_t var, int k) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    MultiPoly scaled(const BigRational& c) const;       // c * p
    MultiPoly mul_term(const Mono& m, const BigRational& c) const;
    MultiPoly pow(unsigned k) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Positive rational c such that p/c has coprime integer coefficients;
    /// 0 for the zero polynomial.
    BigRational rational_content() const;
    /// p divided by its signed content: coprime integer coefficients and a
    /// positive leading coefficient.  Zero stays zero.
    MultiPoly primitive_part() const;
    /// p divided by its leading coefficient (leading coefficient becomes 1).
    MultiPoly make_monic() const;

    /// Remap into another context by variable name.  Throws if a variable
    /// with a nonzero exponent has no counterpart in the target.
    MultiPoly convert_context(const ContextPtr& target) const;

    /// Full evaluation; point must assign every context variable in order.
    template <class F>
    F evaluate(const std::vector<F>& point) const;

    /// Human-readable rendering, e.g. "3*x1^2*x2 - 1/2".
    std::string to_string() const;

  private:
    MultiPoly(ContextPtr ctx, std::vector<Term> terms)
        : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

    ContextPtr ctx_;
    std::vector<Term> terms_;  // descending graded-lex, no zero coefficients

    friend class MultiPolyBuilder;
};

/// Merge-context helper: returns the non-null context, checking agreement
/// when both are present.
ContextPtr join_contexts(const ContextPtr& a, const ContextPtr& b);

/// Exact division.  try_exact_div answers the divisibility question with
/// std::nullopt as the definite "no"; exact_div throws NotDivisible instead.
std::optional<MultiPoly> try_exact_div(const MultiPoly& p, const MultiPoly& q);
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);

struct NotDivisible : Error {
    NotDivisible() : Error("polynomial is not an exact multiple of the divisor") {}
};

template <class F>
F MultiPoly::evaluate(const std::vector<F>& point) const {
    const std::size_t nvars = ctx_ ? ctx_->size() : 0;
    if (point.size() < nvars) {
        throw MissingAssignment("evaluation point assigns " + std::to_string(point.size()) +
                                " of " + std::to_string(nvars) + " variables");
    }
    // Power tables keep the per-term work down to one multiply per variable.
    std::vector<std::vector<F>> powers(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
        int maxe = degree_in(v);
        powers[v].reserve(static_cast<std::size_t>(maxe < 0 ? 0 : maxe) + 1);
        powers[v].push_back(FieldOps<F>::one());
        for (int k = 1; k <= maxe; ++k) powers[v].push_back(powers[v].back() * point[v]);
    }
    F acc = FieldOps<F>::zero();
    for (const Term& t : terms_) {
        F val = FieldOps<F>::from_rational(t.coeff);
        for (std::size_t v = 0; v < nvars; ++v) {
            if (t.mono.e[v] != 0) val = val * powers[v][t.mono.e[v]];
        }
        acc = acc + val;
    }
    return acc;
}

}  // namespace specarb
