#include "specarb/pattern_s.hpp"

namespace specarb {

ZeroPattern pattern_S() {
    ZeroPattern p;
    p.n = 8;
    for (const auto& pos : detail::kXPositions) p.support.insert({pos.row, pos.col});
    return p;
}

ZeroPattern pattern_D(int m) {
    if (m < 0) throw DimensionMismatch("block count must be non-negative");
    ZeroPattern p;
    p.n = 2 * m;
    for (int b = 0; b < m; ++b) {
        const int base = 2 * b;
        p.support.insert({base, base});
        p.support.insert({base, base + 1});
        p.support.insert({base + 1, base});
        p.support.insert({base + 1, base + 1});
    }
    return p;
}

ZeroPattern pattern_diag(const ZeroPattern& a, const ZeroPattern& b) {
    ZeroPattern p;
    p.n = a.n + b.n;
    p.support = a.support;
    for (const auto& [r, c] : b.support) p.support.insert({a.n + r, a.n + c});
    return p;
}

SquareMatrix<MultiPoly> build_X_symbolic(const ContextPtr& ctx) {
    std::array<MultiPoly, 8> xs;
    for (int i = 0; i < 8; ++i) {
        int idx = ctx->index_of("x" + std::to_string(i + 1));
        if (idx < 0) throw std::logic_error("context lacks variable x" + std::to_string(i + 1));
        xs[static_cast<std::size_t>(i)] = MultiPoly::variable(ctx, static_cast<std::size_t>(idx));
    }
    SquareMatrix<MultiPoly> M(8, MultiPoly::zero(ctx));
    const MultiPoly one = MultiPoly::constant(ctx, BigRational(1));
    for (const auto& pos : detail::kXPositions) {
        M.at(pos.row, pos.col) =
            pos.param == 0 ? one : xs[static_cast<std::size_t>(pos.param - 1)];
    }
    return M;
}

const SymbolicPhi& phi_symbolic() {
    static const SymbolicPhi cached = [] {
        SymbolicPhi out;
        out.ctx = ctx_x8();
        MonicPoly<MultiPoly> cp = char_poly(build_X_symbolic(out.ctx));
        for (int i = 0; i < 8; ++i) out.phi[static_cast<std::size_t>(i)] = cp.coeff(i);
        return out;
    }();
    return cached;
}

MultiPoly obstruction_certificate() {
    const SymbolicPhi& phi = phi_symbolic();
    if (phi.phi[7].is_zero()) {
        throw CertificateFailed("phi7 is identically zero; the divisibility argument is vacuous");
    }
    auto q = try_exact_div(phi.phi[4], phi.phi[7]);
    if (!q) throw CertificateFailed("phi4 is not an exact multiple of phi7");
    if (q->is_zero()) throw CertificateFailed("the quotient phi4 / phi7 is zero");
    if (*q * phi.phi[7] != phi.phi[4]) {
        throw CertificateFailed("re-multiplication check q * phi7 == phi4 failed");
    }
    return std::move(*q);
}

XParams<BigRational> witness_nilpotent() {
    XParams<BigRational> p;
    const long values[8] = {1, -1, 1, 1, -1, 1, -2, 1};
    for (std::size_t i = 0; i < 8; ++i) p.x[i] = BigRational(values[i]);
    return p;
}

XParams<BigRational> witness_all_ones_spectrum() {
    XParams<BigRational> p;
    p.x[0] = parse_rational("1737/848");
    p.x[1] = parse_rational("5047/848");
    p.x[2] = parse_rational("-4452/193");
    p.x[3] = parse_rational("35/4");
    p.x[4] = parse_rational("2/7");
    p.x[5] = parse_rational("25/2");
    p.x[6] = parse_rational("1007374319/138787072");
    p.x[7] = parse_rational("-1325/7");
    return p;
}

}  // namespace specarb
