#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "specarb/rational.hpp"

namespace specarb {

/// Uniform access to the three coefficient fields the library computes over:
/// exact rationals, exact Gaussian rationals, and double-precision complex
/// numbers.  Exact fields compare with ==; the float field uses a relative
/// tolerance so that verification over doubles stays meaningful.
template <class F>
struct FieldOps;

template <>
struct FieldOps<BigRational> {
    static constexpr bool exact = true;
    static BigRational zero() { return BigRational(0); }
    static BigRational one() { return BigRational(1); }
    static BigRational from_rational(const BigRational& q) { return q; }
    static BigRational from_long(long n) { return BigRational(n); }
    static bool is_zero(const BigRational& a) { return a == 0; }
    static bool equal(const BigRational& a, const BigRational& b) { return a == b; }
    static std::string to_string(const BigRational& a) { return format_rational(a); }
};

template <>
struct FieldOps<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_rational(const BigRational& q) {
        return GaussianRational(q, BigRational(0));
    }
    static GaussianRational from_long(long n) { return GaussianRational(n); }
    static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
    static bool equal(const GaussianRational& a, const GaussianRational& b) { return a == b; }
    static std::string to_string(const GaussianRational& a) { return format_gaussian(a); }
};

template <>
struct FieldOps<std::complex<double>> {
    static constexpr bool exact = false;
    /// Relative tolerance for "equal" / "zero" judgements over doubles.
    static constexpr double kTol = 1e-9;

    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_rational(const BigRational& q) {
        return {q.get_d(), 0.0};
    }
    static std::complex<double> from_long(long n) {
        return {static_cast<double>(n), 0.0};
    }
    static bool is_zero(const std::complex<double>& a) { return std::abs(a) <= kTol; }
    /// |a-b| <= tol * max(1, |a|, |b|).
    static bool equal(const std::complex<double>& a, const std::complex<double>& b) {
        double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= kTol * scale;
    }
    static std::string to_string(const std::complex<double>& a);
};

/// Canonical strict total order on field encodings: value order for
/// rationals, lexicographic on (re, im) otherwise.  Used wherever a
/// deterministic arrangement of spectrum values is needed (pairing,
/// multiplicity counting, tie-breaking).  Floats compare exactly — this is
/// an ordering of encodings, not a tolerant comparison.
template <class F>
struct FieldOrder;

template <>
struct FieldOrder<BigRational> {
    bool operator()(const BigRational& a, const BigRational& b) const { return a < b; }
};

template <>
struct FieldOrder<GaussianRational> {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

template <>
struct FieldOrder<std::complex<double>> {
    bool operator()(const std::complex<double>& a, const std::complex<double>& b) const {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    }
};

}  // namespace specarb
