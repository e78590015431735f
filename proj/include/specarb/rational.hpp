#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "specarb/errors.hpp"

namespace specarb {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.  GMP's mpq_class already maintains that invariant
/// after canonicalize(), so we use it directly.
using BigRational = mpq_class;

inline BigRational rational_from_long(long num, long den = 1) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "p", "-p", or "p/q" (whitespace-free).  Throws ParseError on
/// malformed input or a zero denominator.
BigRational parse_rational(const std::string& text);

/// Render as "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const BigRational& q);

/// Hash suitable for unordered containers keyed by rationals.
std::size_t hash_rational(const BigRational& q);

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    BigRational re;
    BigRational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long n) : re(n), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw ZeroDivisor();
        BigRational norm = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

/// Render "a+bi" in a human-friendly way: pure-real values print as the
/// rational alone, pure-imaginary as "bi", otherwise "a+bi"/"a-bi".
std::string format_gaussian(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace specarb
