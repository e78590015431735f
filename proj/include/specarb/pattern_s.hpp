#pragma once

#include <array>

#include "specarb/charpoly.hpp"
#include "specarb/matrix.hpp"
#include "specarb/multipoly.hpp"
#include "specarb/zeropattern.hpp"

namespace specarb {

/// The eight matrix parameters; the pattern requires every one nonzero.
template <class F>
struct XParams {
    std::array<F, 8> x{};  // x[0] is x1, ..., x[7] is x8

    friend bool operator==(const XParams& a, const XParams& b) { return a.x == b.x; }
};

/// The eight coefficient polynomials of det(tI - X) over {x1..x8}:
/// phi[i] is the coefficient of t^i.
struct SymbolicPhi {
    ContextPtr ctx;
    std::array<MultiPoly, 8> phi;
};

namespace detail {
/// The 15 support positions of X, 0-based, with the parameter index (1..8)
/// carried by parameter entries and 0 marking the fixed 1-entries.
/// Chain entries (i, i+1) for i = 0..6 are the fixed ones.
struct XPosition {
    int row, col, param;  // param == 0 means the entry is the constant 1
};
inline constexpr std::array<XPosition, 15> kXPositions = {{
    {0, 0, 1}, {0, 1, 0}, {1, 0, 7}, {1, 1, 2}, {1, 2, 0},
    {2, 1, 3}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 1, 8},
    {5, 6, 0}, {6, 7, 0}, {7, 0, 6}, {7, 3, 5}, {7, 5, 4},
}};
}  // namespace detail

/// The 8x8 matrix X(x1..x8).  Every parameter must be nonzero; position
/// checks are strict because the pattern's entries are required nonzero.
template <class F>
SquareMatrix<F> build_X(const XParams<F>& p) {
    for (int i = 0; i < 8; ++i) {
        if (FieldOps<F>::is_zero(p.x[static_cast<std::size_t>(i)])) throw ZeroParameter(i + 1);
    }
    SquareMatrix<F> M(8, FieldOps<F>::zero());
    const F one = FieldOps<F>::one();
    for (const auto& pos : detail::kXPositions) {
        M.at(pos.row, pos.col) =
            pos.param == 0 ? one : p.x[static_cast<std::size_t>(pos.param - 1)];
    }
    return M;
}

/// X with the parameters left symbolic, over a context containing x1..x8.
SquareMatrix<MultiPoly> build_X_symbolic(const ContextPtr& ctx);

/// det(tI - X) coefficients in Q[x1..x8].  Computed once, then cached.
const SymbolicPhi& phi_symbolic();

/// The quotient q with phi4 = q * phi7, certified by re-multiplication;
/// throws CertificateFailed if the division or the re-check fails, or if
/// phi7 were identically zero.
MultiPoly obstruction_certificate();

/// (1, -1, 1, 1, -1, 1, -2, 1): char poly t^8.
XParams<BigRational> witness_nilpotent();

/// The exact parameters whose char poly is (t-1)^8.
XParams<BigRational> witness_all_ones_spectrum();

/// Convert an exact-rational parameter set into any coefficient field.
template <class F>
XParams<F> convert_params(const XParams<BigRational>& p) {
    XParams<F> out;
    for (std::size_t i = 0; i < 8; ++i) out.x[i] = FieldOps<F>::from_rational(p.x[i]);
    return out;
}

/// Diagonal-similarity normal form: conjugate M (which must have support
/// exactly pattern_S) by the diagonal D with d1 = 1 and d_{i+1} = d_i *
/// m_{i,i+1} along the chain, making all chain entries 1; read off the
/// parameters.  The char poly is preserved by similarity.
template <class F>
XParams<F> normalize_to_X(const SquareMatrix<F>& M) {
    const ZeroPattern expected = pattern_S();
    const ZeroPattern actual = support_of(M);
    if (actual != expected) {
        for (const auto& pos : expected.support) {
            if (!actual.support.count(pos)) {
                throw WrongPattern("entry (" + std::to_string(pos.first + 1) + "," +
                                   std::to_string(pos.second + 1) +
                                   ") is zero but the pattern requires it nonzero");
            }
        }
        for (const auto& pos : actual.support) {
            if (!expected.support.count(pos)) {
                throw WrongPattern("entry (" + std::to_string(pos.first + 1) + "," +
                                   std::to_string(pos.second + 1) +
                                   ") is nonzero outside the pattern");
            }
        }
        throw WrongPattern("support does not match the 8x8 pattern");
    }

    std::array<F, 8> d;
    d[0] = FieldOps<F>::one();
    for (int i = 0; i < 7; ++i) {
        const F& chain = M.at(i, i + 1);
        if (FieldOps<F>::is_zero(chain)) throw ZeroChainEntry(i + 1);
        d[static_cast<std::size_t>(i + 1)] = d[static_cast<std::size_t>(i)] * chain;
    }
    // (D M D^{-1})_{ij} = d_i m_{ij} / d_j at the parameter positions.
    XParams<F> out;
    for (const auto& pos : detail::kXPositions) {
        if (pos.param == 0) continue;
        out.x[static_cast<std::size_t>(pos.param - 1)] =
            d[static_cast<std::size_t>(pos.row)] * M.at(pos.row, pos.col) /
            d[static_cast<std::size_t>(pos.col)];
    }
    return out;
}

/// Parameters realizing c^8 * f(t/c) when p realizes f(t): conjugate the
/// scaled matrix back into X form.
template <class F>
XParams<F> scale_realization(const XParams<F>& p, const F& c) {
    if (FieldOps<F>::is_zero(c)) throw ZeroScale();
    return normalize_to_X(build_X(p).scaled(c));
}

}  // namespace specarb
