#pragma once

#include <algorithm>
#include <vector>

#include "specarb/field.hpp"
#include "specarb/matrix.hpp"

namespace specarb {

/// A 2x2 matrix [[a, b], [c, d]] with all four entries nonzero, trace
/// lambda+mu and determinant lambda*mu.
template <class F>
struct PairRealization {
    F a, b, c, d;

    SquareMatrix<F> to_matrix() const {
        SquareMatrix<F> m(2, FieldOps<F>::zero());
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        m.at(1, 0) = c;
        m.at(1, 1) = d;
        return m;
    }
};

/// Deterministic full 2x2 block with char poly (t-lambda)(t-mu): with
/// s = lambda+mu and p = lambda*mu, take the first positive integer a with
/// a != s and a(s-a) != p, then d = s-a, b = 1, c = a*d - p.  Each
/// constraint excludes at most two integers, so the scan is short; the
/// choices force all four entries nonzero.
template <class F>
PairRealization<F> realize_pair(const F& lambda, const F& mu) {
    const F s = lambda + mu;
    const F p = lambda * mu;
    for (long k = 1;; ++k) {
        const F a = FieldOps<F>::from_long(k);
        if (FieldOps<F>::equal(a, s)) continue;  // d would be zero
        const F d = s - a;
        const F c = a * d - p;
        if (FieldOps<F>::is_zero(c)) continue;  // determinant constraint
        return PairRealization<F>{a, FieldOps<F>::one(), c, d};
    }
}

/// Block-diagonal realization of an even-cardinality spectrum on m full 2x2
/// blocks: sort by the canonical field order, pair adjacent values, realize
/// each pair.  4m nonzero entries; char poly = product over the pairs.
template <class F>
SquareMatrix<F> realize_D(std::vector<F> spectrum) {
    if (spectrum.size() % 2 != 0) throw OddCardinality();
    if (spectrum.empty()) throw EmptyList();
    std::sort(spectrum.begin(), spectrum.end(), FieldOrder<F>{});
    const int m = static_cast<int>(spectrum.size() / 2);
    SquareMatrix<F> out(2 * m, FieldOps<F>::zero());
    for (int b = 0; b < m; ++b) {
        const auto pr = realize_pair(spectrum[static_cast<std::size_t>(2 * b)],
                                     spectrum[static_cast<std::size_t>(2 * b + 1)]);
        const int base = 2 * b;
        out.at(base, base) = pr.a;
        out.at(base, base + 1) = pr.b;
        out.at(base + 1, base) = pr.c;
        out.at(base + 1, base + 1) = pr.d;
    }
    return out;
}

}  // namespace specarb
