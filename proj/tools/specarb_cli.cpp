// Command-line front end: certification, symbolic solving, the degree
// computation, spectrum realization, full assembly, and independent
// verification, with machine-readable JSON everywhere.
//
// Exit codes: 0 success; 1 a certification check failed or an internal
// invariant broke; 2 the input is not realizable (or subset selection gave
// up); 3 an assembled/supplied matrix failed verification; 4 unusable input
// (bad JSON, wrong shapes, conflicting flags).

#include <array>
#include <complex>
#include <cstdint>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "specarb/assembler.hpp"
#include "specarb/charpoly.hpp"
#include "specarb/serialize.hpp"
#include "specarb/solver.hpp"

namespace {

using namespace specarb;

struct RunConfig {
    bool json = false;
    bool exact = true;
    std::uint64_t seed = 0;
    long retries = 10000;
    std::string out;
};

void emit(const RunConfig& cfg, const json& doc, const std::string& human) {
    if (!cfg.out.empty()) write_json_file(cfg.out, doc);
    if (cfg.json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

// ---- certify ---------------------------------------------------------------

MonicPoly<BigRational> binomial_eighth_power() {
    std::vector<BigRational> roots(8, BigRational(1));
    return MonicPoly<BigRational>::from_roots(roots);
}

int cmd_certify(const RunConfig& cfg, const std::string& inject_x1) {
    json checks = json::array();
    bool all_pass = true;
    long quotient_terms = 0;

    // Check 1: the nilpotent witness parameters give char poly t^8.
    {
        json c{{"name", "nilpotent-witness"}};
        try {
            XParams<BigRational> p = witness_nilpotent();
            if (!inject_x1.empty()) p.x[0] = parse_rational(inject_x1);
            MonicPoly<BigRational> cp = char_poly(build_X(p));
            const MonicPoly<BigRational> t8{std::vector<BigRational>(8, BigRational(0))};
            c["pass"] = (cp == t8);
            c["detail"] = (cp == t8) ? "characteristic polynomial is t^8"
                                     : "characteristic polynomial is " + cp.to_string();
        } catch (const ZeroParameter& e) {
            c["pass"] = false;
            c["detail"] = std::string("pattern violation: ") + e.what();
        }
        all_pass = all_pass && c["pass"].get<bool>();
        checks.push_back(std::move(c));
    }

    // Check 2: the rational witness gives char poly (t-1)^8.
    {
        json c{{"name", "binomial-witness"}};
        MonicPoly<BigRational> cp = char_poly(build_X(witness_all_ones_spectrum()));
        const MonicPoly<BigRational> want = binomial_eighth_power();
        c["pass"] = (cp == want);
        c["detail"] = (cp == want) ? "characteristic polynomial is (t-1)^8"
                                   : "characteristic polynomial is " + cp.to_string();
        all_pass = all_pass && c["pass"].get<bool>();
        checks.push_back(std::move(c));
    }

    // Check 3: coefficient 4 is an exact multiple of coefficient 7.
    {
        json c{{"name", "quotient-divisibility"}};
        try {
            MultiPoly q = obstruction_certificate();
            quotient_terms = q.num_terms();
            c["pass"] = true;
            c["detail"] = "phi4 / phi7 = " + q.to_string();
        } catch (const CertificateFailed& e) {
            c["pass"] = false;
            c["detail"] = e.what();
        }
        all_pass = all_pass && c["pass"].get<bool>();
        checks.push_back(std::move(c));
    }

    json doc{{"pass", all_pass}, {"checks", checks}, {"quotient_terms", quotient_terms}};
    std::string human;
    for (const auto& c : checks) {
        human += c["name"].get<std::string>() + ": " +
                 (c["pass"].get<bool>() ? "PASS" : "FAIL") + " (" +
                 c["detail"].get<std::string>() + ")\n";
    }
    human += std::string("certify: ") + (all_pass ? "PASS" : "FAIL") + "\n";
    emit(cfg, doc, human);
    return all_pass ? 0 : 1;
}

// ---- solve ------------------------------------------------------------------

int cmd_solve(const RunConfig& cfg) {
    const SolutionMap& s = solution_map();
    const PiPolynomial& pi = pi_polynomial();
    const bool identity = check_back_substitution(phi_symbolic(), s);

    json solution = json::object();
    for (int v = 0; v < 8; ++v) {
        solution["x" + std::to_string(v + 1)] = ratfunc_to_json(s.x[static_cast<std::size_t>(v)]);
    }
    json order = json::array();
    for (const auto& [eq, var] : s.order) order.push_back(json::array({eq, var}));
    json doc{{"order", order},
             {"solution", solution},
             {"back_substitution_identity", identity},
             {"pi", poly_to_json(pi.pi)},
             {"pi_terms", pi.pi.num_terms()},
             {"pi_total_degree", pi.pi.total_degree()}};

    std::string human = "elimination trace:\n";
    for (std::size_t k = 0; k < s.order.size(); ++k) {
        const auto& [eq, var] = s.order[k];
        human += "  round " + std::to_string(k + 1) + ": coefficient " + std::to_string(eq) +
                 " solved for x" + std::to_string(var) + "\n";
    }
    for (int v = 0; v < 8; ++v) {
        human += "x" + std::to_string(v + 1) + " = " +
                 s.x[static_cast<std::size_t>(v)].to_string() + "\n";
    }
    human += std::string("back-substitution identity: ") + (identity ? "PASS" : "FAIL") + "\n";
    human += "pi: " + std::to_string(pi.pi.num_terms()) + " terms, total degree " +
             std::to_string(pi.pi.total_degree()) + "\n";
    emit(cfg, doc, human);
    return identity ? 0 : 1;
}

// ---- degree -----------------------------------------------------------------

int cmd_degree(const RunConfig& cfg, const std::string& weights, bool emit_pi) {
    const PiPolynomial& pi = pi_polynomial();
    long value = 0;
    if (weights == "uniform") {
        value = pi.pi.total_degree();
    } else {
        std::vector<long> w(8);
        for (int i = 0; i < 8; ++i) w[static_cast<std::size_t>(i)] = 8 - i;
        value = pi.pi.weighted_degree(w);
    }
    const bool documented = (weights != "uniform");
    const long documented_value = 94;

    json doc{{"weights", weights}, {"value", value}};
    if (documented) {
        doc["documented_value"] = documented_value;
        doc["matches_documented"] = (value == documented_value);
    }
    if (emit_pi) doc["pi"] = poly_to_json(pi.pi);

    std::string human = std::to_string(value) + "\n";
    if (documented && value != documented_value) {
        human += "WARNING: weighted degree " + std::to_string(value) +
                 " differs from the documented value " + std::to_string(documented_value) + "\n";
        std::cerr << "WARNING: weighted degree " << value
                  << " differs from the documented value " << documented_value << "\n";
    }
    emit(cfg, doc, human);
    return 0;
}

// ---- shared spectrum plumbing ------------------------------------------------

/// True when every value parses as a plain rational (no imaginary part), in
/// which case the exact backend works over the rationals and prints "p/q"
/// scalars; otherwise exact work happens over the Gaussian rationals.
bool spectrum_is_rational(const json& values) {
    for (const auto& v : values.at("values")) {
        if (v.is_object()) {
            GaussianRational z = ScalarCodec<GaussianRational>::decode(v);
            if (z.im != 0) return false;
        }
    }
    return true;
}

std::string describe(const Unrealizable& u) { return u.reason; }

template <class F>
int run_realize(const RunConfig& cfg, const json& spec_json) {
    const std::vector<F> sigma = spectrum_from_json<F>(spec_json);
    RealizeOutcome<F> outcome = realize_spectrum_S<F>(sigma);
    if (std::holds_alternative<Unrealizable>(outcome)) {
        const auto& u = std::get<Unrealizable>(outcome);
        json doc{{"realizable", false}, {"reason", describe(u)}};
        emit(cfg, doc, "unrealizable: " + describe(u) + "\n");
        return 2;
    }
    const XParams<F>& p = std::get<XParams<F>>(outcome);
    json doc = xparams_to_json(p);
    doc["realizable"] = true;
    std::string human;
    for (int i = 0; i < 8; ++i) {
        human += "x" + std::to_string(i + 1) + " = " +
                 FieldOps<F>::to_string(p.x[static_cast<std::size_t>(i)]) + "\n";
    }
    emit(cfg, doc, human);
    return 0;
}

template <class F>
json report_to_json(const RealizationReport<F>& rep, const SubsetSelection<F>& sel) {
    json block_degrees = json::array();
    for (const auto& b : rep.block_polys) block_degrees.push_back(b.degree());
    return json{
        {"n", rep.matrix.size()},
        {"pass", rep.pass},
        {"pattern_ok", rep.pattern_ok},
        {"nonzero_count", rep.nonzero_count},
        {"product_matches", rep.assembled.approx_equal(rep.target)},
        {"target_degree", rep.target.degree()},
        {"block_count", rep.block_polys.size()},
        {"block_degrees", block_degrees},
        {"branch",
         sel.branch == SelectionBranch::GenericSubset ? "generic-subset" : "repeated-value"},
        {"tried", sel.tried},
        {"sigma", spectrum_to_json(sel.sigma)["values"]},
    };
}

template <class F>
int run_assemble(const RunConfig& cfg, const json& spec_json, const std::string& matrix_out) {
    const std::vector<F> values = spectrum_from_json<F>(spec_json);
    SelectOptions opt;
    opt.seed = cfg.seed;
    opt.retries = cfg.retries;
    SubsetSelection<F> sel;
    RealizationReport<F> rep = realize_full<F>(values, opt, &sel);
    json doc = report_to_json(rep, sel);
    if (!matrix_out.empty()) write_json_file(matrix_out, matrix_to_json(rep.matrix));

    std::string human = "n = " + std::to_string(rep.matrix.size()) +
                        ", nonzeros = " + std::to_string(rep.nonzero_count) +
                        ", pattern " + (rep.pattern_ok ? "ok" : "VIOLATED") +
                        ", spectrum " + (rep.pass ? "verified" : "MISMATCH") + "\n";
    if (cfg.json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << human;
    }
    return rep.pass ? 0 : 3;
}

template <class F>
int run_verify(const RunConfig& cfg, const SquareMatrix<F>& M, const json& spec_json,
               const ZeroPattern& pattern) {
    const std::vector<F> values = spectrum_from_json<F>(spec_json);
    const MonicPoly<F> target = MonicPoly<F>::from_roots(values);
    RealizationReport<F> rep = verify(M, pattern, target);
    json doc{{"n", rep.matrix.size()},
             {"pass", rep.pass},
             {"pattern_ok", rep.pattern_ok},
             {"nonzero_count", rep.nonzero_count},
             {"product_matches", rep.assembled.approx_equal(rep.target)}};
    std::string human = std::string("verification: ") + (rep.pass ? "PASS" : "FAIL") +
                        " (pattern " + (rep.pattern_ok ? "ok" : "violated") + ", product " +
                        (rep.assembled.approx_equal(rep.target) ? "matches" : "differs") + ")\n";
    emit(cfg, doc, human);
    return rep.pass ? 0 : 3;
}

/// The expected zero pattern for an n x n assembled matrix: the 8x8 head
/// plus (n-8)/2 full 2x2 blocks.
ZeroPattern expected_pattern(int n) {
    if (n < 8 || (n - 8) % 2 != 0) {
        throw ParseError("matrix dimension " + std::to_string(n) +
                         " cannot split into the 8x8 head plus 2x2 blocks");
    }
    if (n == 8) return pattern_S();
    return pattern_diag(pattern_S(), pattern_D((n - 8) / 2));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification and realization toolkit for a spectrally "
                 "arbitrary sparse zero pattern"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    app.add_flag("--json", cfg.json, "emit machine-readable JSON on stdout");
    app.add_flag("--exact,!--float", cfg.exact,
                 "arithmetic backend: exact rationals (default) or complex doubles");
    app.add_option("--seed", cfg.seed, "seed for randomized subset search");
    app.add_option("--retries", cfg.retries, "candidate subsets to try before giving up");
    app.add_option("--out", cfg.out, "also write the JSON document to this path");

    auto* certify = app.add_subcommand("certify", "reproduce the witness and divisibility checks");
    std::string inject_x1;
    certify->add_option("--inject-x1", inject_x1,
                        "override x1 of the nilpotent witness (negative control)");

    auto* solve = app.add_subcommand("solve", "solve the coefficient equations symbolically");

    auto* degree = app.add_subcommand("degree", "weighted degree of the certificate polynomial pi");
    std::string weights = "8-i";
    bool emit_pi = false;
    degree->add_option("--weights", weights, "weight scheme: 8-i (default) or uniform")
        ->check(CLI::IsMember({"8-i", "uniform"}));
    degree->add_flag("--emit-pi", emit_pi, "include the serialized pi polynomial");

    auto* realize = app.add_subcommand("realize", "realize an 8-value spectrum on the 8x8 pattern");
    std::string realize_spectrum;
    realize->add_option("--spectrum", realize_spectrum, "spectrum JSON file")->required();

    auto* assemble = app.add_subcommand("assemble", "realize a full spectrum as a block matrix");
    std::string assemble_spectrum;
    assemble->add_option("--spectrum", assemble_spectrum, "spectrum JSON file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "independently verify a realization");
    std::string verify_matrix, verify_spectrum, verify_pattern;
    verify_cmd->add_option("--matrix", verify_matrix, "matrix JSON file")->required();
    verify_cmd->add_option("--spectrum", verify_spectrum, "target spectrum JSON file")->required();
    verify_cmd->add_option("--pattern", verify_pattern,
                           "zero pattern JSON file (default: head + 2x2 blocks shape)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help/version exit cleanly; any flag misuse is a config error.
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        const bool certification = certify->parsed() || solve->parsed() || degree->parsed();
        if (certification && !cfg.exact) {
            std::cerr << "certify/solve/degree are exact-only commands; drop --float\n";
            return 4;
        }

        if (certify->parsed()) return cmd_certify(cfg, inject_x1);
        if (solve->parsed()) return cmd_solve(cfg);
        if (degree->parsed()) return cmd_degree(cfg, weights, emit_pi);

        if (realize->parsed()) {
            const json sj = read_json_file(realize_spectrum);
            if (!cfg.exact) return run_realize<std::complex<double>>(cfg, sj);
            if (spectrum_is_rational(sj)) return run_realize<BigRational>(cfg, sj);
            return run_realize<GaussianRational>(cfg, sj);
        }
        if (assemble->parsed()) {
            const json sj = read_json_file(assemble_spectrum);
            if (!cfg.exact) return run_assemble<std::complex<double>>(cfg, sj, cfg.out);
            if (spectrum_is_rational(sj)) return run_assemble<BigRational>(cfg, sj, cfg.out);
            return run_assemble<GaussianRational>(cfg, sj, cfg.out);
        }
        if (verify_cmd->parsed()) {
            const json sj = read_json_file(verify_spectrum);
            const json mj = read_json_file(verify_matrix);
            auto pattern_of = [&](int n) {
                return verify_pattern.empty() ? expected_pattern(n)
                                              : pattern_from_json(read_json_file(verify_pattern));
            };
            if (!cfg.exact) {
                auto M = matrix_from_json<std::complex<double>>(mj);
                return run_verify(cfg, M, sj, pattern_of(M.size()));
            }
            if (spectrum_is_rational(sj)) {
                auto M = matrix_from_json<BigRational>(mj);
                return run_verify(cfg, M, sj, pattern_of(M.size()));
            }
            auto M = matrix_from_json<GaussianRational>(mj);
            return run_verify(cfg, M, sj, pattern_of(M.size()));
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 4;
    } catch (const WrongArity& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 4;
    } catch (const BadCardinality& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 4;
    } catch (const SelectionFailed& e) {
        std::cerr << "selection failed: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
