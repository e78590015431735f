#include <complex>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "specarb/serialize.hpp"
#include "specarb/solver.hpp"

using namespace specarb;

TEST_CASE("scalar codecs round-trip") {
    // Exact rationals travel as strings, integers are accepted on input.
    CHECK(ScalarCodec<BigRational>::encode(BigRational(3, 4)) == json("3/4"));
    CHECK(ScalarCodec<BigRational>::decode(json("3/4")) == BigRational(3, 4));
    CHECK(ScalarCodec<BigRational>::decode(json(7)) == BigRational(7));
    CHECK_THROWS_AS(ScalarCodec<BigRational>::decode(json(1.5)), ParseError);

    GaussianRational z(BigRational(1, 2), BigRational(-3));
    json jz = ScalarCodec<GaussianRational>::encode(z);
    CHECK(jz.at("re") == "1/2");
    CHECK(jz.at("im") == "-3");
    CHECK(ScalarCodec<GaussianRational>::decode(jz) == z);
    // Bare rationals are read as purely real.
    CHECK(ScalarCodec<GaussianRational>::decode(json("5/3")) ==
          GaussianRational(BigRational(5, 3), BigRational(0)));

    using C = std::complex<double>;
    CHECK(ScalarCodec<C>::encode(C(2.5, 0.0)) == json(2.5));
    C back = ScalarCodec<C>::decode(ScalarCodec<C>::encode(C(1.5, -2.25)));
    CHECK(back == C(1.5, -2.25));
    // Exact strings are usable in float mode.
    CHECK(ScalarCodec<C>::decode(json("1/2")) == C(0.5, 0.0));
}

TEST_CASE("spectrum JSON shape and round-trip") {
    std::vector<BigRational> values{BigRational(1), BigRational(-2, 3)};
    json j = spectrum_to_json(values);
    CHECK(j.at("values").size() == 2);
    CHECK(spectrum_from_json<BigRational>(j) == values);
    CHECK_THROWS_AS(spectrum_from_json<BigRational>(json::array()), ParseError);
    CHECK_THROWS_AS(spectrum_from_json<BigRational>(json{{"value", 1}}), ParseError);
}

TEST_CASE("parameter JSON uses the x1..x8 keys") {
    XParams<BigRational> p = witness_all_ones_spectrum();
    json j = xparams_to_json(p);
    CHECK(j.at("x1") == "1737/848");
    XParams<BigRational> q = xparams_from_json<BigRational>(j);
    CHECK(q == p);
    j.erase("x5");
    CHECK_THROWS_AS(xparams_from_json<BigRational>(j), ParseError);
}

TEST_CASE("sparse matrix JSON round-trips with 1-based indices") {
    SquareMatrix<BigRational> M(3, BigRational(0));
    M.at(0, 1) = BigRational(5, 2);
    M.at(2, 0) = BigRational(-1);
    json j = matrix_to_json(M);
    CHECK(j.at("n") == 3);
    REQUIRE(j.at("entries").size() == 2);
    CHECK(j.at("entries")[0] == json::array({1, 2, "5/2"}));
    CHECK(j.at("entries")[1] == json::array({3, 1, "-1"}));

    SquareMatrix<BigRational> back = matrix_from_json<BigRational>(j);
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) CHECK(back.at(i, k) == M.at(i, k));
    }
    CHECK_THROWS_AS(matrix_from_json<BigRational>(json{{"n", 2}}), ParseError);
    json bad{{"n", 2}, {"entries", json::array({json::array({3, 1, "1"})})}};
    CHECK_THROWS_AS(matrix_from_json<BigRational>(bad), ParseError);
}

TEST_CASE("monic polynomial JSON keeps degree and coefficients consistent") {
    MonicPoly<BigRational> p =
        MonicPoly<BigRational>::from_roots({BigRational(1), BigRational(2)});
    json j = monic_to_json(p);
    CHECK(j.at("degree") == 2);
    CHECK(monic_from_json<BigRational>(j) == p);
    j["degree"] = 3;
    CHECK_THROWS_AS(monic_from_json<BigRational>(j), ParseError);
}

TEST_CASE("zero pattern JSON round-trips") {
    ZeroPattern S = pattern_S();
    json j = pattern_to_json(S);
    CHECK(j.at("n") == 8);
    CHECK(j.at("support").size() == 15);
    CHECK(pattern_from_json(j) == S);
    // 1-based on the wire: the (1,1) head entry appears literally.
    bool found = false;
    for (const auto& e : j.at("support")) found = found || e == json::array({1, 1});
    CHECK(found);
    CHECK_THROWS_AS(pattern_from_json(json{{"n", 2}}), ParseError);
}

TEST_CASE("multivariate polynomial JSON is self-contained") {
    MultiPoly x1 = MultiPoly::variable(ctx_x8(), 0);
    MultiPoly x4 = MultiPoly::variable(ctx_x8(), 3);
    MultiPoly p = x1 * x4.pow(2).scaled(BigRational(-7, 3)) + x1;
    json j = poly_to_json(p);
    CHECK(j.at("variables")[0] == "x1");
    CHECK(poly_from_json(j) == p);

    json bad = j;
    bad["terms"][0]["exponents"] = json::array({1});  // wrong arity
    CHECK_THROWS_AS(poly_from_json(bad), ParseError);
}

TEST_CASE("rational function JSON exposes numerator and denominator") {
    const SolutionMap& s = solution_map();
    json j = ratfunc_to_json(s.x[3]);  // x4 = -tau4 / tau7
    CHECK(poly_from_json(j.at("num")) == -MultiPoly::variable(ctx_tau8(), 4));
    CHECK(poly_from_json(j.at("den")) == MultiPoly::variable(ctx_tau8(), 7));
}

TEST_CASE("file round-trip and parse failure") {
    const std::string path = "serialize_roundtrip_tmp.json";
    json doc{{"values", json::array({"1", "2"})}};
    write_json_file(path, doc);
    CHECK(read_json_file(path) == doc);

    const std::string broken = "serialize_broken_tmp.json";
    {
        std::ofstream out(broken);
        out << "{ not json";
    }
    CHECK_THROWS_AS(read_json_file(broken), ParseError);
    CHECK_THROWS_AS(read_json_file("no_such_file_anywhere.json"), ParseError);
    std::remove(path.c_str());
    std::remove(broken.c_str());
}
