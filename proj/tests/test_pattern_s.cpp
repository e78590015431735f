#include <random>

#include "doctest.h"
#include "specarb/charpoly.hpp"
#include "specarb/pattern_s.hpp"
#include "specarb/ring.hpp"
#include "testutil.hpp"

using namespace specarb;
using testutil::rand_nonzero_rational;

namespace {

XParams<BigRational> random_params(std::mt19937& rng) {
    XParams<BigRational> p;
    for (auto& q : p.x) q = rand_nonzero_rational(rng, -6, 6, 3);
    return p;
}

MultiPoly var_x(int i) { return MultiPoly::variable(ctx_x8(), static_cast<std::size_t>(i - 1)); }

}  // namespace

TEST_CASE("the 8x8 pattern has 2n-1 entries and matches the built matrix") {
    ZeroPattern S = pattern_S();
    CHECK(S.n == 8);
    CHECK(S.support.size() == 15);  // 2*8 - 1

    std::mt19937 rng(301);
    XParams<BigRational> p = random_params(rng);
    CHECK(support_of(build_X(p)) == S);

    // The superdiagonal chain (i, i+1) for i = 1..7 is fixed to ones.
    SquareMatrix<BigRational> X = build_X(p);
    for (int i = 0; i < 7; ++i) CHECK(X.at(i, i + 1) == 1);
}

TEST_CASE("zero parameters are rejected with the culprit named") {
    std::mt19937 rng(302);
    for (int i = 0; i < 8; ++i) {
        XParams<BigRational> p = random_params(rng);
        p.x[static_cast<std::size_t>(i)] = 0;
        try {
            build_X(p);
            FAIL("expected ZeroParameter for x" << i + 1);
        } catch (const ZeroParameter& e) {
            CHECK(e.index == i + 1);
        }
    }
}

TEST_CASE("symbolic coefficients specialize to every numeric char poly") {
    const SymbolicPhi& phi = phi_symbolic();
    std::mt19937 rng(303);
    for (int t = 0; t < 20; ++t) {
        XParams<BigRational> p = random_params(rng);
        MonicPoly<BigRational> cp = char_poly(build_X(p));
        std::vector<BigRational> at(p.x.begin(), p.x.end());
        for (int i = 0; i < 8; ++i) {
            CHECK(phi.phi[static_cast<std::size_t>(i)].evaluate<BigRational>(at) == cp.coeff(i));
        }
    }
}

TEST_CASE("closed forms of the structured coefficients") {
    const SymbolicPhi& phi = phi_symbolic();
    // Lowest coefficient: -x1*x3*x5 - x6.
    CHECK(phi.phi[0] == -(var_x(1) * var_x(3) * var_x(5)) - var_x(6));
    // Coefficient 4 factors through coefficient 7.
    CHECK(phi.phi[4] == (var_x(1) + var_x(2)) * var_x(4));
    CHECK(phi.phi[7] == -(var_x(1) + var_x(2)));
}

TEST_CASE("the divisibility certificate is the expected quotient") {
    const SymbolicPhi& phi = phi_symbolic();
    MultiPoly q = obstruction_certificate();
    CHECK(q == -var_x(4));
    CHECK(q * phi.phi[7] == phi.phi[4]);
    CHECK_FALSE(phi.phi[7].is_zero());
}

TEST_CASE("nilpotent witness: char poly is exactly t^8") {
    XParams<BigRational> w = witness_nilpotent();
    const std::array<long, 8> documented{1, -1, 1, 1, -1, 1, -2, 1};
    for (int i = 0; i < 8; ++i) {
        CHECK(w.x[static_cast<std::size_t>(i)] == documented[static_cast<std::size_t>(i)]);
    }
    MonicPoly<BigRational> cp = char_poly(build_X(w));
    for (int i = 0; i < 8; ++i) CHECK(cp.coeff(i) == 0);
}

TEST_CASE("rational witness: char poly is exactly (t-1)^8") {
    XParams<BigRational> w = witness_all_ones_spectrum();
    CHECK(w.x[0] == BigRational(1737, 848));
    MonicPoly<BigRational> cp = char_poly(build_X(w));
    MonicPoly<BigRational> want =
        MonicPoly<BigRational>::from_roots(std::vector<BigRational>(8, BigRational(1)));
    CHECK(cp == want);
    // Explicit binomial coefficients, fixed signs.
    CHECK(want.coeff(7) == -8);
    CHECK(want.coeff(6) == 28);
    CHECK(want.coeff(0) == 1);
}

TEST_CASE("diagonal normalization undoes conjugation") {
    std::mt19937 rng(304);
    for (int t = 0; t < 20; ++t) {
        XParams<BigRational> p = random_params(rng);
        SquareMatrix<BigRational> X = build_X(p);
        // Conjugate by a random nonzero diagonal; the support is unchanged.
        std::vector<BigRational> d(8);
        for (auto& q : d) q = rand_nonzero_rational(rng);
        SquareMatrix<BigRational> C(8, BigRational(0));
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                C.at(i, j) = d[static_cast<std::size_t>(i)] * X.at(i, j) /
                             d[static_cast<std::size_t>(j)];
            }
        }
        CHECK(normalize_to_X(C) == p);
    }
}

TEST_CASE("normalization rejects wrong supports") {
    std::mt19937 rng(305);
    XParams<BigRational> p = random_params(rng);
    SquareMatrix<BigRational> X = build_X(p);
    X.at(3, 3) = 1;  // an entry the pattern requires to be zero
    CHECK_THROWS_AS(normalize_to_X(X), WrongPattern);

    SquareMatrix<BigRational> Y = build_X(p);
    Y.at(0, 0) = 0;  // an entry the pattern requires to be nonzero
    CHECK_THROWS_AS(normalize_to_X(Y), WrongPattern);
}

TEST_CASE("scaling a realization scales the spectrum") {
    XParams<BigRational> w = witness_all_ones_spectrum();
    BigRational c(3);
    XParams<BigRational> s = scale_realization(w, c);
    MonicPoly<BigRational> want =
        MonicPoly<BigRational>::from_roots(std::vector<BigRational>(8, c));
    CHECK(char_poly(build_X(s)) == want);
    CHECK_THROWS_AS(scale_realization(w, BigRational(0)), ZeroScale);
}
