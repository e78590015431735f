#pragma once

#include "specarb/multipoly.hpp"
#include "specarb/polygcd.hpp"

namespace specarb {

/// Reduced quotient of two polynomials: denominator nonzero, gcd(num, den)
/// constant, denominator normalized to leading coefficient 1.  Construction
/// always reduces, so reduction is idempotent by design.
class RationalFunction {
  public:
    /// Zero (0/1) in no particular context; adopts a context on first use.
    RationalFunction();
    RationalFunction(MultiPoly num, MultiPoly den);
    static RationalFunction from_poly(MultiPoly p);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    /// Exact evaluation; throws ZeroDivisor when the denominator vanishes at
    /// the point.  Callers needing to distinguish vanishing numerators from
    /// vanishing denominators evaluate num()/den() separately.
    template <class F>
    F evaluate(const std::vector<F>& point) const {
        F d = den_.template evaluate<F>(point);
        if (FieldOps<F>::is_zero(d)) throw ZeroDivisor();
        return num_.template evaluate<F>(point) / d;
    }

    std::string to_string() const;

  private:
    void reduce();
    MultiPoly num_;
    MultiPoly den_;
};

}  // namespace specarb
