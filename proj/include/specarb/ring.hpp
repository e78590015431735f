#pragma once

#include "specarb/field.hpp"
#include "specarb/multipoly.hpp"

namespace specarb {

/// The small surface the matrix/char-poly code needs from a scalar: it must
/// be a commutative Q-algebra (ring operations plus exact division by the
/// integers 1..n).  Fields delegate to FieldOps; polynomials divide their
/// coefficients.  "like" parameters let polynomial scalars inherit the right
/// variable context from a neighboring value.
template <class R>
struct RingOps {
    static R zero_like(const R&) { return FieldOps<R>::zero(); }
    static R one_like(const R&) { return FieldOps<R>::one(); }
    static bool is_zero(const R& a) { return FieldOps<R>::is_zero(a); }
    static R div_by_int(const R& a, long k) { return a / FieldOps<R>::from_long(k); }
};

template <>
struct RingOps<MultiPoly> {
    static MultiPoly zero_like(const MultiPoly& p) { return MultiPoly::zero(p.context()); }
    static MultiPoly one_like(const MultiPoly& p) {
        return MultiPoly::constant(p.context(), BigRational(1));
    }
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static MultiPoly div_by_int(const MultiPoly& a, long k) {
        return a.scaled(BigRational(1, k));
    }
};

}  // namespace specarb
