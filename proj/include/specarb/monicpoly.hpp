#pragma once

#include <string>
#include <vector>

#include "specarb/errors.hpp"
#include "specarb/field.hpp"

namespace specarb {

/// Monic polynomial of degree n over a field: the n coefficients of
/// t^0..t^(n-1) are stored, the leading coefficient 1 is implicit.
template <class F>
class MonicPoly {
  public:
    /// Degree = coeffs.size(); the empty vector is the constant 1.
    explicit MonicPoly(std::vector<F> coeffs = {}) : c_(std::move(coeffs)) {}

    static MonicPoly from_roots(const std::vector<F>& roots) {
        // Incremental multiplication by (t - r): Vieta's construction.
        std::vector<F> c;  // degree grows by one per root
        for (const F& r : roots) {
            std::vector<F> b(c.size() + 1, FieldOps<F>::zero());
            for (std::size_t k = 0; k < c.size(); ++k) {
                b[k] = b[k] - r * c[k];
                b[k + 1] = b[k + 1] + c[k];
            }
            // The old implicit leading 1 contributes -r at t^d; its t-shift
            // becomes the new implicit leading 1.
            b[c.size()] = b[c.size()] - r;
            c = std::move(b);
        }
        return MonicPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()); }
    const F& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<F>& coeffs() const { return c_; }

    F evaluate(const F& t) const {
        F acc = FieldOps<F>::one();  // implicit leading coefficient
        for (int k = degree() - 1; k >= 0; --k) acc = acc * t + c_[static_cast<std::size_t>(k)];
        return acc;
    }

    friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const MonicPoly& a, const MonicPoly& b) { return !(a.c_ == b.c_); }

    /// Tolerant coefficientwise comparison (exact fields compare exactly).
    bool approx_equal(const MonicPoly& other) const {
        if (degree() != other.degree()) return false;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (!FieldOps<F>::equal(c_[k], other.c_[k])) return false;
        }
        return true;
    }

    std::string to_string(const std::string& var = "t") const {
        std::string out = term_str(degree(), FieldOps<F>::one(), var, true);
        for (int k = degree() - 1; k >= 0; --k) {
            const F& c = c_[static_cast<std::size_t>(k)];
            if (FieldOps<F>::is_zero(c)) continue;
            out += term_str(k, c, var, false);
        }
        return out;
    }

  private:
    static std::string term_str(int k, const F& c, const std::string& var, bool lead) {
        std::string cs = FieldOps<F>::to_string(c);
        std::string sign = lead ? "" : " + ";
        if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            sign = lead ? "-" : " - ";
            cs = cs.substr(1);
        }
        std::string body;
        if (k == 0) {
            body = cs;
        } else {
            body = (cs == "1" ? "" : cs + "*") + var + (k == 1 ? "" : "^" + std::to_string(k));
        }
        return sign + body;
    }

    std::vector<F> c_;
};

/// Product of monic polynomials: monic, degree = sum of degrees.
template <class F>
MonicPoly<F> poly_product(const std::vector<MonicPoly<F>>& ps) {
    if (ps.empty()) throw EmptyList();
    // Work with full coefficient vectors (leading 1 included) and convolve.
    std::vector<F> acc = {FieldOps<F>::one()};
    for (const auto& p : ps) {
        std::vector<F> full = p.coeffs();
        full.push_back(FieldOps<F>::one());
        std::vector<F> next(acc.size() + full.size() - 1, FieldOps<F>::zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            for (std::size_t j = 0; j < full.size(); ++j) {
                next[i + j] = next[i + j] + acc[i] * full[j];
            }
        }
        acc = std::move(next);
    }
    acc.pop_back();  // drop the leading 1
    return MonicPoly<F>(std::move(acc));
}

}  // namespace specarb
