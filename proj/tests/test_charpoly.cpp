#include <algorithm>
#include <complex>
#include <random>

#include "doctest.h"
#include "specarb/charpoly.hpp"
#include "specarb/ring.hpp"
#include "testutil.hpp"

using namespace specarb;
using testutil::rand_matrix;
using testutil::rand_nonzero_rational;
using testutil::rand_rational;

namespace {

/// Cofactor-expansion characteristic polynomial: det(tI - M) computed over
/// the polynomial ring Q[t].  Independent oracle for char_poly.
MonicPoly<BigRational> char_poly_via_det(const SquareMatrix<BigRational>& M) {
    ContextPtr ctx = VariableContext::make({"t"});
    const int n = M.size();
    MultiPoly t = MultiPoly::variable(ctx, 0);
    SquareMatrix<MultiPoly> A(n, MultiPoly::zero(ctx));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            A.at(i, j) = MultiPoly::constant(ctx, -M.at(i, j));
            if (i == j) A.at(i, j) += t;
        }
    }
    MultiPoly det = det_bruteforce(A);
    std::vector<BigRational> coeffs(static_cast<std::size_t>(n), BigRational(0));
    for (const auto& term : det.terms()) {
        const int k = static_cast<int>(term.mono.e[0]);
        REQUIRE(k <= n);
        if (k == n) {
            REQUIRE(term.coeff == 1);  // det(tI - M) is monic
        } else {
            coeffs[static_cast<std::size_t>(k)] = term.coeff;
        }
    }
    return MonicPoly<BigRational>(std::move(coeffs));
}

}  // namespace

TEST_CASE("characteristic polynomial matches the cofactor oracle") {
    std::mt19937 rng(201);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        SquareMatrix<BigRational> M = rand_matrix(rng, n);
        CHECK(char_poly(M) == char_poly_via_det(M));
    }
}

TEST_CASE("trace and determinant read off the extreme coefficients") {
    std::mt19937 rng(202);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        SquareMatrix<BigRational> M = rand_matrix(rng, n);
        MonicPoly<BigRational> p = char_poly(M);
        CHECK(p.degree() == n);
        CHECK(p.coeff(n - 1) == -M.trace());
        BigRational det = det_bruteforce(M);
        CHECK(p.coeff(0) == (n % 2 == 0 ? det : -det));
    }
}

TEST_CASE("companion matrices reproduce their polynomial") {
    std::mt19937 rng(203);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<BigRational> c(static_cast<std::size_t>(n));
        for (auto& q : c) q = rand_rational(rng);
        SquareMatrix<BigRational> C(n, BigRational(0));
        for (int i = 0; i + 1 < n; ++i) C.at(i + 1, i) = BigRational(1);
        for (int i = 0; i < n; ++i) C.at(i, n - 1) = -c[static_cast<std::size_t>(i)];
        CHECK(char_poly(C) == MonicPoly<BigRational>(c));
    }
}

TEST_CASE("similarity invariance: diagonal and permutation conjugation") {
    std::mt19937 rng(204);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        SquareMatrix<BigRational> M = rand_matrix(rng, n);
        MonicPoly<BigRational> p = char_poly(M);

        // D M D^{-1} with random nonzero diagonal.
        std::vector<BigRational> d(static_cast<std::size_t>(n));
        for (auto& q : d) q = rand_nonzero_rational(rng);
        SquareMatrix<BigRational> DM(n, BigRational(0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                DM.at(i, j) = d[static_cast<std::size_t>(i)] * M.at(i, j) /
                              d[static_cast<std::size_t>(j)];
            }
        }
        CHECK(char_poly(DM) == p);

        // P M P^T for a random permutation.
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SquareMatrix<BigRational> PM(n, BigRational(0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                PM.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) =
                    M.at(i, j);
            }
        }
        CHECK(char_poly(PM) == p);
    }
}

TEST_CASE("scaling: char poly of cM has coefficients c^(n-k) times the original") {
    std::mt19937 rng(205);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        SquareMatrix<BigRational> M = rand_matrix(rng, n);
        BigRational c = rand_nonzero_rational(rng);
        MonicPoly<BigRational> p = char_poly(M);
        MonicPoly<BigRational> q = char_poly(M.scaled(c));
        BigRational cpow(1);
        for (int k = n - 1; k >= 0; --k) {
            cpow *= c;  // c^(n-k)
            CHECK(q.coeff(k) == cpow * p.coeff(k));
        }
    }
}

TEST_CASE("gaussian rational and float backends agree with the exact result") {
    std::mt19937 rng(206);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        SquareMatrix<BigRational> M = rand_matrix(rng, n);
        MonicPoly<BigRational> p = char_poly(M);

        SquareMatrix<GaussianRational> Mg(n, GaussianRational());
        SquareMatrix<std::complex<double>> Mf(n, {0.0, 0.0});
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Mg.at(i, j) = FieldOps<GaussianRational>::from_rational(M.at(i, j));
                Mf.at(i, j) = FieldOps<std::complex<double>>::from_rational(M.at(i, j));
            }
        }
        MonicPoly<GaussianRational> pg = char_poly(Mg);
        MonicPoly<std::complex<double>> pf = char_poly(Mf);
        for (int k = 0; k < n; ++k) {
            CHECK(pg.coeff(k) == FieldOps<GaussianRational>::from_rational(p.coeff(k)));
            CHECK(FieldOps<std::complex<double>>::equal(
                pf.coeff(k), FieldOps<std::complex<double>>::from_rational(p.coeff(k))));
        }
    }

    // A genuinely complex case: [[i, 0], [0, -i]] has char poly t^2 + 1.
    const GaussianRational i(BigRational(0), BigRational(1));
    SquareMatrix<GaussianRational> J(2, GaussianRational());
    J.at(0, 0) = i;
    J.at(1, 1) = -i;
    MonicPoly<GaussianRational> pj = char_poly(J);
    CHECK(pj.coeff(1) == GaussianRational());
    CHECK(pj.coeff(0) == GaussianRational(1));
}

TEST_CASE("monic polynomial basics: roots, products, evaluation") {
    MonicPoly<BigRational> p =
        MonicPoly<BigRational>::from_roots({BigRational(1), BigRational(2), BigRational(3)});
    // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    CHECK(p.degree() == 3);
    CHECK(p.coeff(2) == -6);
    CHECK(p.coeff(1) == 11);
    CHECK(p.coeff(0) == -6);
    CHECK(p.evaluate(BigRational(2)) == 0);
    CHECK(p.evaluate(BigRational(0)) == -6);

    MonicPoly<BigRational> a = MonicPoly<BigRational>::from_roots({BigRational(1)});
    MonicPoly<BigRational> b = MonicPoly<BigRational>::from_roots({BigRational(2), BigRational(3)});
    CHECK(poly_product(std::vector<MonicPoly<BigRational>>{a, b}) == p);
    CHECK_THROWS_AS(poly_product(std::vector<MonicPoly<BigRational>>{}), EmptyList);

    // The empty product of roots is the constant 1 (degree 0).
    CHECK(MonicPoly<BigRational>::from_roots({}).degree() == 0);
    CHECK(MonicPoly<BigRational>::from_roots({}).evaluate(BigRational(17)) == 1);
}

TEST_CASE("cofactor determinant caps its dimension") {
    SquareMatrix<BigRational> M(10, BigRational(0));
    CHECK_THROWS_AS(det_bruteforce(M), DimensionTooLarge);
}
