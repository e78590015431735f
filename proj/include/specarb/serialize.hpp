#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "specarb/matrix.hpp"
#include "specarb/monicpoly.hpp"
#include "specarb/multipoly.hpp"
#include "specarb/pattern_s.hpp"
#include "specarb/ratfunc.hpp"
#include "specarb/zeropattern.hpp"

namespace specarb {

using nlohmann::json;

/// Scalar <-> JSON.  Exact rationals travel as "p/q" strings (denominator 1
/// omitted), Gaussian rationals as {"re", "im"} string pairs, floating
/// complex values as numbers (real) or {"re", "im"} number pairs.  Decoders
/// are permissive across these shapes where the meaning is unambiguous.
template <class F>
struct ScalarCodec;

template <>
struct ScalarCodec<BigRational> {
    static json encode(const BigRational& q) { return format_rational(q); }
    static BigRational decode(const json& j) {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return BigRational(j.get<long>());
        throw ParseError("expected an exact rational (\"p/q\" string or integer), got " +
                         j.dump());
    }
};

template <>
struct ScalarCodec<GaussianRational> {
    static json encode(const GaussianRational& z) {
        return json{{"re", format_rational(z.re)}, {"im", format_rational(z.im)}};
    }
    static GaussianRational decode(const json& j) {
        if (j.is_object()) {
            GaussianRational z;
            if (j.contains("re")) z.re = ScalarCodec<BigRational>::decode(j.at("re"));
            if (j.contains("im")) z.im = ScalarCodec<BigRational>::decode(j.at("im"));
            return z;
        }
        return GaussianRational(ScalarCodec<BigRational>::decode(j), BigRational(0));
    }
};

template <>
struct ScalarCodec<std::complex<double>> {
    static json encode(const std::complex<double>& z) {
        if (z.imag() == 0.0) return z.real();
        return json{{"re", z.real()}, {"im", z.imag()}};
    }
    static std::complex<double> decode(const json& j) {
        if (j.is_number()) return {j.get<double>(), 0.0};
        if (j.is_string()) {
            // Allow exact-rational strings in float mode for shared inputs.
            return {parse_rational(j.get<std::string>()).get_d(), 0.0};
        }
        if (j.is_object()) {
            double re = 0.0, im = 0.0;
            if (j.contains("re")) re = component(j.at("re"));
            if (j.contains("im")) im = component(j.at("im"));
            return {re, im};
        }
        throw ParseError("expected a complex number, got " + j.dump());
    }

  private:
    static double component(const json& j) {
        if (j.is_number()) return j.get<double>();
        if (j.is_string()) return parse_rational(j.get<std::string>()).get_d();
        throw ParseError("expected a numeric component, got " + j.dump());
    }
};

// ---- spectra ----------------------------------------------------------------

template <class F>
json spectrum_to_json(const std::vector<F>& values) {
    json arr = json::array();
    for (const F& v : values) arr.push_back(ScalarCodec<F>::encode(v));
    return json{{"values", std::move(arr)}};
}

template <class F>
std::vector<F> spectrum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j.at("values").is_array()) {
        throw ParseError("spectrum JSON must be {\"values\": [...]}");
    }
    std::vector<F> out;
    for (const auto& item : j.at("values")) out.push_back(ScalarCodec<F>::decode(item));
    return out;
}

// ---- parameters -------------------------------------------------------------

template <class F>
json xparams_to_json(const XParams<F>& p) {
    json out = json::object();
    for (int i = 0; i < 8; ++i) {
        out["x" + std::to_string(i + 1)] = ScalarCodec<F>::encode(p.x[static_cast<std::size_t>(i)]);
    }
    return out;
}

template <class F>
XParams<F> xparams_from_json(const json& j) {
    XParams<F> p;
    for (int i = 0; i < 8; ++i) {
        const std::string key = "x" + std::to_string(i + 1);
        if (!j.contains(key)) throw ParseError("parameter JSON lacks \"" + key + "\"");
        p.x[static_cast<std::size_t>(i)] = ScalarCodec<F>::decode(j.at(key));
    }
    return p;
}

// ---- matrices (sparse; 1-based indices) --------------------------------------

template <class F>
json matrix_to_json(const SquareMatrix<F>& M) {
    json entries = json::array();
    for (int i = 0; i < M.size(); ++i) {
        for (int j2 = 0; j2 < M.size(); ++j2) {
            if (RingOps<F>::is_zero(M.at(i, j2))) continue;
            entries.push_back(json::array({i + 1, j2 + 1, ScalarCodec<F>::encode(M.at(i, j2))}));
        }
    }
    return json{{"n", M.size()}, {"entries", std::move(entries)}};
}

template <class F>
SquareMatrix<F> matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
        throw ParseError("matrix JSON must be {\"n\": n, \"entries\": [[row, col, value], ...]}");
    }
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("matrix dimension must be positive");
    SquareMatrix<F> M(n, FieldOps<F>::zero());
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) {
            throw ParseError("matrix entry must be [row, col, value], got " + e.dump());
        }
        const int r = e.at(0).get<int>(), c = e.at(1).get<int>();
        if (r < 1 || r > n || c < 1 || c > n) {
            throw ParseError("matrix entry position out of range: " + e.dump());
        }
        M.at(r - 1, c - 1) = ScalarCodec<F>::decode(e.at(2));
    }
    return M;
}

// ---- monic polynomials --------------------------------------------------------

template <class F>
json monic_to_json(const MonicPoly<F>& p) {
    json coeffs = json::array();
    for (const F& c : p.coeffs()) coeffs.push_back(ScalarCodec<F>::encode(c));
    return json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

template <class F>
MonicPoly<F> monic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs")) {
        throw ParseError("monic polynomial JSON must be {\"degree\": n, \"coeffs\": [...]}");
    }
    std::vector<F> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(ScalarCodec<F>::decode(c));
    if (static_cast<int>(coeffs.size()) != j.at("degree").get<int>()) {
        throw ParseError("monic polynomial coefficient count disagrees with its degree");
    }
    return MonicPoly<F>(std::move(coeffs));
}

// ---- zero patterns, multivariate polynomials, rational functions -------------

json pattern_to_json(const ZeroPattern& p);
ZeroPattern pattern_from_json(const json& j);

/// Terms as a list of {"exponents": [...], "coeff": "p/q"}; the variables
/// array travels alongside so the encoding is self-contained.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

json ratfunc_to_json(const RationalFunction& f);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace specarb
