#include <complex>
#include <random>

#include "doctest.h"
#include "specarb/polygcd.hpp"
#include "specarb/ratfunc.hpp"
#include "testutil.hpp"

using namespace specarb;
using testutil::rand_nonzero_poly;
using testutil::rand_poly;
using testutil::rand_rational;

TEST_CASE("rational parse/format round-trip and canonicalization") {
    CHECK(format_rational(parse_rational("3/4")) == "3/4");
    CHECK(format_rational(parse_rational("-7")) == "-7");
    CHECK(format_rational(parse_rational("0")) == "0");
    CHECK(format_rational(parse_rational("4/6")) == "2/3");
    CHECK(format_rational(parse_rational("-10/5")) == "-2");
    CHECK(parse_rational("1737/848") == BigRational(1737, 848));

    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1 / 2"), ParseError);

    std::mt19937 rng(101);
    for (int t = 0; t < 200; ++t) {
        BigRational q = rand_rational(rng, -1000, 1000, 999);
        CHECK(parse_rational(format_rational(q)) == q);
    }
}

TEST_CASE("gaussian rational field axioms and known products") {
    const GaussianRational i(BigRational(0), BigRational(1));
    CHECK(i * i == GaussianRational(-1));
    CHECK(GaussianRational(BigRational(1), BigRational(2)) *
              GaussianRational(BigRational(3), BigRational(-1)) ==
          GaussianRational(BigRational(5), BigRational(5)));

    std::mt19937 rng(102);
    for (int t = 0; t < 100; ++t) {
        GaussianRational a(rand_rational(rng), rand_rational(rng));
        GaussianRational b(rand_rational(rng), rand_rational(rng));
        if (b.is_zero()) continue;
        CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
    }
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), ZeroDivisor);
}

TEST_CASE("float field tolerance semantics") {
    using C = std::complex<double>;
    CHECK(FieldOps<C>::equal(C(1.0), C(1.0 + 1e-12)));
    CHECK_FALSE(FieldOps<C>::equal(C(1.0), C(1.1)));
    CHECK(FieldOps<C>::is_zero(C(1e-12)));
    // The tolerance is relative: large magnitudes get proportional slack.
    CHECK(FieldOps<C>::equal(C(1e20), C(1e20 * (1 + 1e-12))));
}

TEST_CASE("canonical term order is graded lexicographic, descending") {
    ContextPtr ctx = VariableContext::make({"x", "y"});
    MultiPoly x = MultiPoly::variable(ctx, 0);
    MultiPoly y = MultiPoly::variable(ctx, 1);
    MultiPoly p = y + x * y + y * y + x + x * x + MultiPoly::constant(ctx, BigRational(5));
    REQUIRE(p.num_terms() == 6);
    const auto& ts = p.terms();
    // x^2 > xy > y^2 > x > y > 1
    CHECK(ts[0].mono.e[0] == 2);
    CHECK(ts[1].mono.e[0] == 1);
    CHECK(ts[1].mono.e[1] == 1);
    CHECK(ts[2].mono.e[1] == 2);
    CHECK(ts[3].mono.e[0] == 1);
    CHECK(ts[4].mono.e[1] == 1);
    CHECK(ts[5].mono.deg == 0);
    CHECK(p.leading_coeff() == 1);
    CHECK(p.total_degree() == 2);
}

TEST_CASE("from_terms merges duplicates and drops zeros") {
    ContextPtr ctx = VariableContext::make({"x"});
    Mono m1;
    m1.e[0] = 2;
    m1.deg = 2;
    Mono m0;
    std::vector<MultiPoly::Term> terms;
    terms.push_back({m1, BigRational(3)});
    terms.push_back({m1, BigRational(-3)});
    terms.push_back({m0, BigRational(7)});
    MultiPoly p = MultiPoly::from_terms(ctx, std::move(terms));
    CHECK(p.num_terms() == 1);
    CHECK(p.is_constant());
    CHECK(p == MultiPoly::constant(ctx, BigRational(7)));
}

TEST_CASE("polynomial ring identities on random inputs") {
    ContextPtr ctx = VariableContext::make({"x", "y", "z"});
    std::mt19937 rng(103);
    const MultiPoly two = MultiPoly::constant(ctx, BigRational(2));
    for (int t = 0; t < 60; ++t) {
        MultiPoly a = rand_poly(rng, ctx, 4, 3);
        MultiPoly b = rand_poly(rng, ctx, 4, 3);
        MultiPoly c = rand_poly(rng, ctx, 4, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * (a + b) == a * a + two * a * b + b * b);
        CHECK(a - a == MultiPoly::zero(ctx));
        CHECK(a.pow(3) == a * a * a);
    }
}

TEST_CASE("exact division inverts multiplication; non-multiples are refused") {
    ContextPtr ctx = VariableContext::make({"x", "y"});
    std::mt19937 rng(104);
    for (int t = 0; t < 60; ++t) {
        MultiPoly a = rand_nonzero_poly(rng, ctx, 4, 3);
        MultiPoly b = rand_nonzero_poly(rng, ctx, 4, 3);
        CHECK(exact_div(a * b, b) == a);
        auto q = try_exact_div(a * b, a);
        REQUIRE(q.has_value());
        CHECK(*q == b);
    }
    MultiPoly x = MultiPoly::variable(ctx, 0);
    MultiPoly one = MultiPoly::constant(ctx, BigRational(1));
    CHECK_FALSE(try_exact_div(x * x + one, x).has_value());
    CHECK_THROWS_AS(exact_div(x * x + one, x), NotDivisible);
    CHECK_THROWS_AS(exact_div(one, MultiPoly::zero(ctx)), ZeroDivisor);
}

TEST_CASE("gcd: known multivariate case and divisibility properties") {
    ContextPtr ctx = VariableContext::make({"x", "y"});
    MultiPoly x = MultiPoly::variable(ctx, 0);
    MultiPoly y = MultiPoly::variable(ctx, 1);

    // gcd(x^2 - y^2, (x + y)^2) = x + y
    CHECK(poly_gcd(x * x - y * y, (x + y) * (x + y)) == x + y);
    // Coprime inputs give 1.
    CHECK(poly_gcd(x + y, x - y).is_constant());
    // gcd with zero normalizes the other argument to leading coefficient 1.
    MultiPoly p = (x + y).scaled(BigRational(-3, 2));
    CHECK(poly_gcd(p, MultiPoly::zero(ctx)) == x + y);
    CHECK_THROWS_AS(poly_gcd(MultiPoly::zero(ctx), MultiPoly::zero(ctx)), ZeroInput);

    std::mt19937 rng(105);
    for (int t = 0; t < 40; ++t) {
        MultiPoly a = rand_nonzero_poly(rng, ctx, 3, 3);
        MultiPoly b = rand_nonzero_poly(rng, ctx, 3, 3);
        MultiPoly g = rand_nonzero_poly(rng, ctx, 3, 2);
        MultiPoly d = poly_gcd(a * g, b * g);
        // d divides both products, and the planted factor divides d.
        CHECK(try_exact_div(a * g, d).has_value());
        CHECK(try_exact_div(b * g, d).has_value());
        CHECK(try_exact_div(d, g.make_monic()).has_value());
        CHECK(d.leading_coeff() == 1);
    }
}

TEST_CASE("lcm: divisible by every input, minimal against the gcd") {
    ContextPtr ctx = VariableContext::make({"x", "y"});
    std::mt19937 rng(106);
    for (int t = 0; t < 30; ++t) {
        MultiPoly a = rand_nonzero_poly(rng, ctx, 3, 2);
        MultiPoly b = rand_nonzero_poly(rng, ctx, 3, 2);
        MultiPoly l = poly_lcm({a, b});
        CHECK(try_exact_div(l, a.make_monic()).has_value());
        CHECK(try_exact_div(l, b.make_monic()).has_value());
        // lcm(a,b) * gcd(a,b) = monic(a*b)
        CHECK(l * poly_gcd(a, b) == (a * b).make_monic());
        CHECK(l.leading_coeff() == 1);
    }
    CHECK_THROWS_AS(poly_lcm({}), EmptyList);
    CHECK_THROWS_AS(poly_lcm({MultiPoly::zero(ctx)}), ZeroInput);
}

TEST_CASE("content and primitive part factor the polynomial") {
    ContextPtr ctx = VariableContext::make({"x", "y"});
    std::mt19937 rng(107);
    for (int t = 0; t < 40; ++t) {
        MultiPoly p = rand_nonzero_poly(rng, ctx, 4, 3);
        BigRational c = p.rational_content();
        CHECK(c > 0);
        MultiPoly pp = p.primitive_part();
        CHECK(pp.leading_coeff() > 0);
        // p = +/- content * primitive_part
        CHECK((pp.scaled(c) == p || pp.scaled(-c) == p));
        // Primitive parts are fixed points.
        CHECK(pp.primitive_part() == pp);
        CHECK(p.make_monic().leading_coeff() == 1);
    }
}

TEST_CASE("evaluation agrees across fields and respects arithmetic") {
    ContextPtr ctx = VariableContext::make({"x", "y"});
    MultiPoly x = MultiPoly::variable(ctx, 0);
    MultiPoly y = MultiPoly::variable(ctx, 1);
    MultiPoly p = x * x * y - y + MultiPoly::constant(ctx, BigRational(1, 2));

    // 9*(-2) - (-2) + 1/2 = -31/2
    std::vector<BigRational> at{BigRational(3), BigRational(-2)};
    CHECK(p.evaluate<BigRational>(at) == BigRational(-31, 2));

    std::vector<std::complex<double>> atf{{3, 0}, {-2, 0}};
    CHECK(FieldOps<std::complex<double>>::equal(p.evaluate<std::complex<double>>(atf),
                                                {-15.5, 0.0}));

    std::vector<GaussianRational> atg{GaussianRational(BigRational(0), BigRational(1)),
                                      GaussianRational(1)};
    // i^2 * 1 - 1 + 1/2 = -3/2
    CHECK(p.evaluate<GaussianRational>(atg) == GaussianRational(BigRational(-3, 2), BigRational(0)));

    CHECK_THROWS_AS(p.evaluate<BigRational>({BigRational(1)}), MissingAssignment);
}

TEST_CASE("context conversion preserves values") {
    MultiPoly x1 = MultiPoly::variable(ctx_x8(), 0);
    MultiPoly x2 = MultiPoly::variable(ctx_x8(), 1);
    MultiPoly p = x1 * x2 + x1;
    MultiPoly q = p.convert_context(ctx_mixed());
    std::vector<BigRational> pt8(8, BigRational(2));
    std::vector<BigRational> pt16(16, BigRational(2));
    CHECK(p.evaluate<BigRational>(pt8) == q.evaluate<BigRational>(pt16));
    // Round-trip back into the smaller context.
    CHECK(q.convert_context(ctx_x8()) == p);
}

TEST_CASE("weighted degree") {
    ContextPtr ctx = VariableContext::make({"x", "y"});
    MultiPoly x = MultiPoly::variable(ctx, 0);
    MultiPoly y = MultiPoly::variable(ctx, 1);
    MultiPoly p = x * x + y;  // weights (3, 5): max(6, 5) = 6
    CHECK(p.weighted_degree({3, 5}) == 6);
    CHECK(p.weighted_degree({1, 1}) == p.total_degree());
    CHECK_THROWS_AS(MultiPoly::zero(ctx).weighted_degree({1, 1}), ZeroPolynomial);
}

TEST_CASE("rational functions stay reduced with monic denominators") {
    ContextPtr ctx = VariableContext::make({"x", "y"});
    MultiPoly x = MultiPoly::variable(ctx, 0);
    MultiPoly y = MultiPoly::variable(ctx, 1);

    RationalFunction f(x * x - y * y, (x + y).scaled(BigRational(2)));
    // (x-y)(x+y) / 2(x+y) reduces to (x-y)/2 with denominator normalized to 1.
    CHECK(f.num() == (x - y).scaled(BigRational(1, 2)));
    CHECK(f.den() == MultiPoly::constant(ctx, BigRational(1)));

    std::mt19937 rng(108);
    for (int t = 0; t < 30; ++t) {
        MultiPoly a = rand_poly(rng, ctx, 3, 2);
        MultiPoly b = rand_nonzero_poly(rng, ctx, 3, 2);
        MultiPoly g = rand_nonzero_poly(rng, ctx, 3, 2);
        RationalFunction r(a * g, b * g);
        CHECK(poly_gcd(r.num().is_zero() ? r.den() : r.num(), r.den()).is_constant());
        CHECK(r.den().leading_coeff() == 1);
        CHECK(r == RationalFunction(a, b));
    }

    RationalFunction u(x, y);
    RationalFunction v(y, x);
    CHECK(u + v == RationalFunction(x * x + y * y, x * y));
    CHECK(u * v == RationalFunction::from_poly(MultiPoly::constant(ctx, BigRational(1))));
    CHECK_THROWS_AS(RationalFunction(x, MultiPoly::zero(ctx)), ZeroDivisor);

    // Evaluation matches num/den evaluation, and flags vanishing denominators.
    std::vector<BigRational> pt{BigRational(3), BigRational(5)};
    CHECK(u.evaluate<BigRational>(pt) == BigRational(3, 5));
    std::vector<BigRational> bad{BigRational(3), BigRational(0)};
    CHECK_THROWS_AS(u.evaluate<BigRational>(bad), ZeroDivisor);
}
