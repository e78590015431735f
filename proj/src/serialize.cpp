#include "specarb/serialize.hpp"

#include <fstream>

namespace specarb {

json pattern_to_json(const ZeroPattern& p) {
    json support = json::array();
    for (const auto& [r, c] : p.support) support.push_back(json::array({r + 1, c + 1}));
    return json{{"n", p.n}, {"support", std::move(support)}};
}

ZeroPattern pattern_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("support")) {
        throw ParseError("pattern JSON must be {\"n\": n, \"support\": [[row, col], ...]}");
    }
    ZeroPattern p;
    p.n = j.at("n").get<int>();
    if (p.n < 1) throw ParseError("pattern dimension must be positive");
    for (const auto& e : j.at("support")) {
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("pattern position must be [row, col], got " + e.dump());
        }
        const int r = e.at(0).get<int>(), c = e.at(1).get<int>();
        if (r < 1 || r > p.n || c < 1 || c > p.n) {
            throw ParseError("pattern position out of range: " + e.dump());
        }
        p.support.emplace(r - 1, c - 1);
    }
    return p;
}

json poly_to_json(const MultiPoly& p) {
    json vars = json::array();
    if (p.context()) {
        for (const std::string& name : p.context()->names()) vars.push_back(name);
    }
    json terms = json::array();
    const int nv = p.context() ? static_cast<int>(p.context()->size()) : 0;
    for (const auto& [mono, coeff] : p.terms()) {
        json exps = json::array();
        for (int v = 0; v < nv; ++v) exps.push_back(mono.e[static_cast<std::size_t>(v)]);
        terms.push_back(json{{"exponents", std::move(exps)}, {"coeff", format_rational(coeff)}});
    }
    return json{{"variables", std::move(vars)}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("terms")) {
        throw ParseError("polynomial JSON must be {\"variables\": [...], \"terms\": [...]}");
    }
    std::vector<std::string> names;
    for (const auto& v : j.at("variables")) names.push_back(v.get<std::string>());
    ContextPtr ctx = VariableContext::make(names);
    std::vector<MultiPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff")) {
            throw ParseError("polynomial term must be {\"exponents\": [...], \"coeff\": ...}");
        }
        const auto& exps = t.at("exponents");
        if (!exps.is_array() || exps.size() != names.size()) {
            throw ParseError("term exponent list length disagrees with the variable list");
        }
        Mono m{};
        for (std::size_t v = 0; v < names.size(); ++v) {
            const int e = exps.at(v).get<int>();
            if (e < 0 || e > 0xffff) throw ParseError("term exponent out of range");
            m.e[v] = static_cast<std::uint16_t>(e);
            m.deg += static_cast<std::uint32_t>(e);
        }
        terms.push_back({m, ScalarCodec<BigRational>::decode(t.at("coeff"))});
    }
    return MultiPoly::from_terms(ctx, std::move(terms));
}

json ratfunc_to_json(const RationalFunction& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace specarb
