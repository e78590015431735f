#include "specarb/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace specarb {

int grlex_cmp(const Mono& a, const Mono& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (std::size_t v = 0; v < VariableContext::kMaxVars; ++v) {
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t v = 0; v < VariableContext::kMaxVars; ++v) {
        unsigned sum = static_cast<unsigned>(a.e[v]) + b.e[v];
        if (sum > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
        r.e[v] = static_cast<std::uint16_t>(sum);
    }
    r.deg = a.deg + b.deg;
    return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t v = 0; v < VariableContext::kMaxVars; ++v) {
        if (a.e[v] > b.e[v]) return false;
    }
    return true;
}

Mono mono_div(const Mono& b, const Mono& a) {
    Mono r;
    for (std::size_t v = 0; v < VariableContext::kMaxVars; ++v) {
        r.e[v] = static_cast<std::uint16_t>(b.e[v] - a.e[v]);
    }
    r.deg = b.deg - a.deg;
    return r;
}

namespace {

struct MonoHash {
    std::size_t operator()(const Mono& m) const {
        std::size_t h = 14695981039346656037ULL;
        for (std::size_t v = 0; v < VariableContext::kMaxVars; ++v) {
            h = (h ^ m.e[v]) * 1099511628211ULL;
        }
        return h;
    }
};

bool grlex_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
    return grlex_cmp(a.mono, b.mono) > 0;
}

}  // namespace

ContextPtr join_contexts(const ContextPtr& a, const ContextPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_context(a, b)) throw ContextMismatch();
    return a;
}

MultiPoly MultiPoly::constant(ContextPtr ctx, BigRational c) {
    std::vector<Term> terms;
    if (c != 0) terms.push_back({Mono{}, std::move(c)});
    return MultiPoly(std::move(ctx), std::move(terms));
}

MultiPoly MultiPoly::variable(ContextPtr ctx, std::size_t index) {
    if (!ctx || index >= ctx->size()) throw std::logic_error("variable index out of range");
    Mono m;
    m.e[index] = 1;
    m.deg = 1;
    return MultiPoly(std::move(ctx), {{m, BigRational(1)}});
}

MultiPoly MultiPoly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), grlex_greater);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    return MultiPoly(std::move(ctx), std::move(out));
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Canonical order is graded, so the leading term carries the max degree.
    return static_cast<int>(terms_.front().mono.deg);
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.e[var]));
    return d;
}

long MultiPoly::weighted_degree(const std::vector<long>& weights) const {
    if (terms_.empty()) throw ZeroPolynomial();
    const std::size_t nvars = ctx_ ? ctx_->size() : 0;
    if (weights.size() < nvars) throw std::logic_error("weight vector too short");
    long best = 0;
    bool first = true;
    for (const Term& t : terms_) {
        long w = 0;
        for (std::size_t v = 0; v < nvars; ++v) w += weights[v] * t.mono.e[v];
        if (first || w > best) best = w;
        first = false;
    }
    return best;
}

const MultiPoly::Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front();
}

MultiPoly MultiPoly::coeff_in(std::size_t var, int k) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (static_cast<int>(t.mono.e[var]) == k) {
            Term s = t;
            s.mono.deg -= s.mono.e[var];
            s.mono.e[var] = 0;
            out.push_back(std::move(s));
        }
    }
    // Zeroing one exponent keeps the relative graded-lex order of the
    // surviving terms, so no re-sort is needed.
    return MultiPoly(ctx_, std::move(out));
}

MultiPoly MultiPoly::operator-() const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff = -t.coeff;
    return MultiPoly(ctx_, std::move(out));
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    ContextPtr ctx = join_contexts(a.ctx_, b.ctx_);
    std::vector<MultiPoly::Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = grlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            out.push_back(a.terms_[i++]);
        } else if (c < 0) {
            out.push_back(b.terms_[j++]);
        } else {
            BigRational sum = a.terms_[i].coeff + b.terms_[j].coeff;
            if (sum != 0) out.push_back({a.terms_[i].mono, std::move(sum)});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    return MultiPoly(std::move(ctx), std::move(out));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    ContextPtr ctx = join_contexts(a.ctx_, b.ctx_);
    if (a.is_zero() || b.is_zero()) return MultiPoly::zero(std::move(ctx));
    if (a.num_terms() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.num_terms() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);

    std::unordered_map<Mono, BigRational, MonoHash> acc;
    acc.reserve(a.num_terms() * 2);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Mono m = mono_mul(ta.mono, tb.mono);
            auto [it, inserted] = acc.try_emplace(std::move(m), 0);
            it->second += ta.coeff * tb.coeff;
        }
    }
    std::vector<MultiPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) out.push_back({m, std::move(c)});
    }
    return MultiPoly::from_terms(std::move(ctx), std::move(out));
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
    if (c == 0) return MultiPoly::zero(ctx_);
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff *= c;
    return MultiPoly(ctx_, std::move(out));
}

MultiPoly MultiPoly::mul_term(const Mono& m, const BigRational& c) const {
    if (c == 0) return MultiPoly::zero(ctx_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    // Multiplying by a fixed monomial preserves graded-lex order.
    for (const Term& t : terms_) out.push_back({mono_mul(t.mono, m), t.coeff * c});
    return MultiPoly(ctx_, std::move(out));
}

MultiPoly MultiPoly::pow(unsigned k) const {
    if (k == 0) {
        if (!ctx_) throw std::logic_error("cannot raise a context-free zero to the power 0");
        return constant(ctx_, BigRational(1));
    }
    if (is_zero()) return *this;
    MultiPoly base = *this;
    MultiPoly acc;  // lazily initialized to avoid a needless multiply by 1
    bool have = false;
    while (k > 0) {
        if (k & 1u) {
            acc = have ? acc * base : base;
            have = true;
        }
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono)) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    // Contexts may differ only when one side is a context-free zero, which
    // the empty-terms comparison above already handles.
    return a.terms_.empty() || same_context(a.ctx_, b.ctx_) || !a.ctx_ || !b.ctx_;
}

BigRational MultiPoly::rational_content() const {
    if (terms_.empty()) return BigRational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Term& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    BigRational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    BigRational c = rational_content();
    if (leading_coeff() < 0) c = -c;
    return scaled(BigRational(1) / c);
}

MultiPoly MultiPoly::make_monic() const {
    if (terms_.empty()) return *this;
    return scaled(BigRational(1) / leading_coeff());
}

MultiPoly MultiPoly::convert_context(const ContextPtr& target) const {
    if (!target) throw std::logic_error("cannot convert into a null context");
    if (!ctx_) return MultiPoly::zero(target);
    std::vector<int> remap(ctx_->size());
    for (std::size_t v = 0; v < ctx_->size(); ++v) remap[v] = target->index_of(ctx_->name(v));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term s;
        s.coeff = t.coeff;
        for (std::size_t v = 0; v < ctx_->size(); ++v) {
            if (t.mono.e[v] == 0) continue;
            if (remap[v] < 0) {
                throw std::logic_error("variable " + ctx_->name(v) +
                                       " is absent from the target context");
            }
            s.mono.e[remap[v]] = t.mono.e[v];
        }
        s.mono.deg = t.mono.deg;
        out.push_back(std::move(s));
    }
    return from_terms(target, std::move(out));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        BigRational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::string vars;
        const std::size_t nvars = ctx_ ? ctx_->size() : 0;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (t.mono.e[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ctx_->name(v);
            if (t.mono.e[v] > 1) vars += "^" + std::to_string(t.mono.e[v]);
        }
        if (vars.empty()) {
            os << format_rational(c);
        } else {
            if (c != 1) os << format_rational(c) << "*";
            os << vars;
        }
    }
    return os.str();
}

std::optional<MultiPoly> try_exact_div(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw ZeroDivisor();
    ContextPtr ctx = join_contexts(p.context(), q.context());
    if (p.is_zero()) return MultiPoly::zero(ctx);

    const auto& qlead = q.leading_term();
    MultiPoly rem = p;
    std::vector<MultiPoly::Term> quot;
    // Long division by leading terms under graded-lex.  For exact multiples
    // every step reduces the leading monomial, so this terminates with
    // remainder zero; the first non-divisible leading monomial is a proof of
    // non-divisibility.
    while (!rem.is_zero()) {
        const auto& rlead = rem.leading_term();
        if (!mono_divides(qlead.mono, rlead.mono)) return std::nullopt;
        Mono m = mono_div(rlead.mono, qlead.mono);
        BigRational c = rlead.coeff / qlead.coeff;
        quot.push_back({m, c});
        rem = rem - q.mul_term(m, c);
    }
    return MultiPoly::from_terms(ctx, std::move(quot));
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
    auto r = try_exact_div(p, q);
    if (!r) throw NotDivisible();
    return std::move(*r);
}

}  // namespace specarb
