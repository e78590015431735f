// Python bindings for the main operations: witness checks, the symbolic
// solution and its certificate polynomial, spectrum realization, full
// assembly, and independent verification.  Exact values cross the language
// boundary as "p/q" strings so nothing is ever rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specarb/assembler.hpp"
#include "specarb/charpoly.hpp"
#include "specarb/serialize.hpp"
#include "specarb/solver.hpp"

namespace py = pybind11;
using namespace specarb;

namespace {

std::vector<BigRational> parse_values(const std::vector<std::string>& values) {
    std::vector<BigRational> out;
    out.reserve(values.size());
    for (const auto& s : values) out.push_back(parse_rational(s));
    return out;
}

using StrPair = std::pair<std::string, std::string>;

GaussianRational parse_gaussian_pair(const StrPair& p) {
    return GaussianRational(parse_rational(p.first), parse_rational(p.second));
}

StrPair format_gaussian_pair(const GaussianRational& z) {
    return {format_rational(z.re), format_rational(z.im)};
}

bool check_nilpotent_witness() {
    MonicPoly<BigRational> cp = char_poly(build_X(witness_nilpotent()));
    for (int i = 0; i < 8; ++i) {
        if (cp.coeff(i) != 0) return false;
    }
    return true;
}

bool check_binomial_witness() {
    return char_poly(build_X(witness_all_ones_spectrum())) ==
           MonicPoly<BigRational>::from_roots(std::vector<BigRational>(8, BigRational(1)));
}

ZeroPattern expected_pattern(int n) {
    if (n < 8 || (n - 8) % 2 != 0) {
        throw ParseError("matrix dimension " + std::to_string(n) +
                         " cannot split into the 8x8 head plus 2x2 blocks");
    }
    if (n == 8) return pattern_S();
    return pattern_diag(pattern_S(), pattern_D((n - 8) / 2));
}

}  // namespace

PYBIND11_MODULE(_specarb, m) {
    m.doc() = "Exact realization and certification of a sparse spectrally arbitrary "
              "zero pattern";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("check_nilpotent_witness", &check_nilpotent_witness,
          "True when the stored integer witness has characteristic polynomial t^8.");
    m.def("check_binomial_witness", &check_binomial_witness,
          "True when the stored rational witness has characteristic polynomial (t-1)^8.");
    m.def(
        "obstruction_quotient", [] { return obstruction_certificate().to_string(); },
        "The exact quotient coefficient4 / coefficient7 of det(tI - X).");

    m.def(
        "solution",
        [] {
            const SolutionMap& s = solution_map();
            py::dict out;
            for (int i = 0; i < 8; ++i) {
                const auto& rf = s.x[static_cast<std::size_t>(i)];
                out[py::str("x" + std::to_string(i + 1))] =
                    py::make_tuple(rf.num().to_string(), rf.den().to_string());
            }
            return out;
        },
        "The solved parameters as {'x1': (numerator, denominator), ...} strings over "
        "tau0..tau7.");
    m.def(
        "solution_json",
        [] {
            const SolutionMap& s = solution_map();
            json out = json::object();
            for (int i = 0; i < 8; ++i) {
                out["x" + std::to_string(i + 1)] =
                    ratfunc_to_json(s.x[static_cast<std::size_t>(i)]);
            }
            return out.dump();
        },
        "The solved parameters as a JSON document with full term lists.");

    m.def(
        "pi_term_count", [] { return pi_polynomial().pi.num_terms(); },
        "Number of terms of the certificate polynomial pi.");
    m.def(
        "pi_total_degree", [] { return pi_polynomial().pi.total_degree(); },
        "Total degree of pi.");
    m.def(
        "pi_weighted_degree",
        [] {
            std::vector<long> w(8);
            for (int i = 0; i < 8; ++i) w[static_cast<std::size_t>(i)] = 8 - i;
            return pi_polynomial().pi.weighted_degree(w);
        },
        "Weighted degree of pi under w(tau_i) = 8 - i.");

    m.def(
        "psi",
        [](const std::vector<std::string>& values) {
            return format_rational(psi<BigRational>(parse_values(values)));
        },
        py::arg("values"),
        "The realizability certificate of an 8-value rational spectrum, as 'p/q'.");
    m.def(
        "psi_gaussian",
        [](const std::vector<StrPair>& values) {
            std::vector<GaussianRational> sigma;
            sigma.reserve(values.size());
            for (const auto& v : values) sigma.push_back(parse_gaussian_pair(v));
            return format_gaussian_pair(psi<GaussianRational>(sigma));
        },
        py::arg("values"),
        "psi over Q(i); values and the result are (re, im) pairs of 'p/q' strings.");

    m.def(
        "realize",
        [](const std::vector<std::string>& values) -> std::optional<py::dict> {
            RealizeOutcome<BigRational> out = realize_spectrum_S(parse_values(values));
            if (!std::holds_alternative<XParams<BigRational>>(out)) return std::nullopt;
            const auto& p = std::get<XParams<BigRational>>(out);
            py::dict d;
            for (int i = 0; i < 8; ++i) {
                d[py::str("x" + std::to_string(i + 1))] =
                    format_rational(p.x[static_cast<std::size_t>(i)]);
            }
            return d;
        },
        py::arg("values"),
        "Parameters realizing an 8-value rational spectrum on the 8x8 pattern, or None "
        "when the spectrum is unrealizable.");
    m.def(
        "realize_gaussian",
        [](const std::vector<StrPair>& values) -> std::optional<py::dict> {
            std::vector<GaussianRational> sigma;
            sigma.reserve(values.size());
            for (const auto& v : values) sigma.push_back(parse_gaussian_pair(v));
            RealizeOutcome<GaussianRational> out = realize_spectrum_S(sigma);
            if (!std::holds_alternative<XParams<GaussianRational>>(out)) return std::nullopt;
            const auto& p = std::get<XParams<GaussianRational>>(out);
            py::dict d;
            for (int i = 0; i < 8; ++i) {
                d[py::str("x" + std::to_string(i + 1))] =
                    format_gaussian_pair(p.x[static_cast<std::size_t>(i)]);
            }
            return d;
        },
        py::arg("values"), "realize() over Q(i), with (re, im) pairs of 'p/q' strings.");

    m.def(
        "assemble",
        [](const std::vector<std::string>& values, unsigned long long seed, long retries) {
            SelectOptions opt;
            opt.seed = seed;
            opt.retries = retries;
            SubsetSelection<BigRational> sel;
            RealizationReport<BigRational> rep = realize_full(parse_values(values), opt, &sel);
            py::dict d;
            d["n"] = rep.matrix.size();
            d["pass"] = rep.pass;
            d["pattern_ok"] = rep.pattern_ok;
            d["nonzero_count"] = rep.nonzero_count;
            d["branch"] = sel.branch == SelectionBranch::GenericSubset ? "generic-subset"
                                                                       : "repeated-value";
            d["tried"] = sel.tried;
            d["matrix_json"] = matrix_to_json(rep.matrix).dump();
            return d;
        },
        py::arg("values"), py::arg("seed") = 0ULL, py::arg("retries") = 10000L,
        "Realize a full rational spectrum as a block-diagonal matrix; the matrix itself "
        "is returned serialized under 'matrix_json'.");

    m.def(
        "verify_matrix",
        [](const std::string& matrix_json, const std::vector<std::string>& values) {
            json parsed;
            try {
                parsed = json::parse(matrix_json);
            } catch (const json::exception& e) {
                throw ParseError(e.what());
            }
            SquareMatrix<BigRational> M = matrix_from_json<BigRational>(parsed);
            MonicPoly<BigRational> target = MonicPoly<BigRational>::from_roots(parse_values(values));
            RealizationReport<BigRational> rep = verify(M, expected_pattern(M.size()), target);
            py::dict d;
            d["pass"] = rep.pass;
            d["pattern_ok"] = rep.pattern_ok;
            d["nonzero_count"] = rep.nonzero_count;
            return d;
        },
        py::arg("matrix_json"), py::arg("values"),
        "Independently verify a serialized matrix against a target rational spectrum.");
}
