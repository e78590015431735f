#include "specarb/ratfunc.hpp"

namespace specarb {

RationalFunction::RationalFunction()
    : num_(), den_(MultiPoly::constant(nullptr, BigRational(1))) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDivisor();
    reduce();
}

RationalFunction RationalFunction::from_poly(MultiPoly p) {
    MultiPoly one = MultiPoly::constant(p.context(), BigRational(1));
    return RationalFunction(std::move(p), std::move(one));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(den_.context(), BigRational(1));
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    // Make the denominator monic, absorbing the unit into the numerator.
    BigRational lc = den_.leading_coeff();
    if (lc != 1) {
        BigRational inv = BigRational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw ZeroDivisor();
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    // Both sides are reduced with monic denominators, so the representation
    // is canonical and componentwise comparison decides equality.
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && !den_.is_zero() && den_.leading_coeff() == 1) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace specarb
