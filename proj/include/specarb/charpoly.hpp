#pragma once

#include <vector>

#include "specarb/matrix.hpp"
#include "specarb/monicpoly.hpp"

namespace specarb {

/// Characteristic polynomial det(tI - M) via the Faddeev-LeVerrier
/// recurrence: M_1 = I and, for k = 1..n,
///     c_{n-k} = -trace(M * M_k) / k,   M_{k+1} = M * M_k + c_{n-k} * I.
/// Only ring operations and division by the integers 1..n are needed, so the
/// same code serves rational, Gaussian-rational, floating and polynomial
/// scalars.
template <class R>
MonicPoly<R> char_poly(const SquareMatrix<R>& M) {
    const int n = M.size();
    const R zero = RingOps<R>::zero_like(M.at(0, 0));
    const R one = RingOps<R>::one_like(M.at(0, 0));
    std::vector<R> c(static_cast<std::size_t>(n), zero);

    SquareMatrix<R> Mk = SquareMatrix<R>::identity(n, zero, one);
    for (int k = 1; k <= n; ++k) {
        SquareMatrix<R> P = M.mul(Mk);
        R ck = RingOps<R>::div_by_int(P.trace(), k);
        // char poly coefficient of t^(n-k):
        c[static_cast<std::size_t>(n - k)] = zero - ck;
        if (k < n) {
            P.add_diag(zero - ck);
            Mk = std::move(P);
        }
    }
    return MonicPoly<R>(std::move(c));
}

/// Cofactor-expansion determinant: the factorial-cost oracle used to
/// cross-check char_poly on small matrices.  Needs no division at all.
template <class R>
R det_bruteforce(const SquareMatrix<R>& M) {
    const int n = M.size();
    if (n > 9) {
        throw DimensionTooLarge(n, "cofactor determinant is factorial-cost and capped at n <= 9, "
                                   "got n = " + std::to_string(n));
    }
    if (n == 1) return M.at(0, 0);
    R acc = RingOps<R>::zero_like(M.at(0, 0));
    for (int j = 0; j < n; ++j) {
        const R& pivot = M.at(0, j);
        if (RingOps<R>::is_zero(pivot)) continue;
        // Minor of (0, j).
        SquareMatrix<R> minor(n - 1, RingOps<R>::zero_like(M.at(0, 0)));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cc++) = M.at(i, k);
            }
        }
        // Two statements, not a ternary: expression-template scalars (GMP)
        // give the branches incompatible lazy types.
        R term = pivot * det_bruteforce(minor);
        if (j % 2 == 0) {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    return acc;
}

}  // namespace specarb
