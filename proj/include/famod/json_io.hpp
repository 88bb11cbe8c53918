#pragma once

#include <json.hpp>

#include "famod.hpp"

namespace famod {

using nlohmann::json;

inline json ring_to_json(const RingParams& r) {
    return json{{"p", r.p}, {"e", r.e}, {"f", r.f}, {"u", r.u}, {"q", r.q}, {"d", r.d}};
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::v: return "v";
        case Family::V: return "V";
        case Family::t0:
        case Family::t1:
        case Family::t2: return "t";
        case Family::x: return "x";
    }
    return "?";
}

inline json monomial_to_json(const Monomial& m) {
    json vars = json::array();
    for (const auto& [k, e] : m.factors()) {
        Family fam = key_family(k);
        int slot = is_t_family(fam) ? t_slot(fam) : 0;
        vars.push_back(json{{"family", family_name(fam)},
                            {"index", key_index(k)},
                            {"slot", slot},
                            {"exp", e}});
    }
    return vars;
}

/// Term schema: {"coeff": [e rational strings], "vars": [...]}, terms in
/// lex_compare order (the map iteration order).
inline json gpoly_to_json(const GradedPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(json{{"coeff", c.serialize()}, {"vars", monomial_to_json(m)}});
    return terms;
}

inline Monomial monomial_from_json(const json& vars) {
    Monomial m;
    for (const auto& v : vars) {
        std::string fam = v.at("family").get<std::string>();
        long long index = v.at("index").get<long long>();
        int slot = v.value("slot", 0);
        long long exp = v.at("exp").get<long long>();
        VarKey k;
        if (fam == "v")
            k = v_key(index);
        else if (fam == "V")
            k = V_key(index);
        else if (fam == "t")
            k = t_key(index, slot);
        else if (fam == "x")
            k = x_key(index);
        else
            throw std::invalid_argument("monomial_from_json: bad family " + fam);
        m = m * Monomial::variable(k, exp);
    }
    return m;
}

inline GradedPoly gpoly_from_json(const RingParams& ring, const json& terms) {
    GradedPoly p(ring);
    for (const auto& t : terms) {
        KElement c = KElement::deserialize(ring, t.at("coeff").get<std::vector<std::string>>());
        p.add_term(monomial_from_json(t.at("vars")), c);
    }
    return p;
}

inline json report_to_json(const Report& rep) {
    json out = json::array();
    for (const auto& e : rep.entries) {
        json item{{"check", e.check}, {"params", e.params}, {"pass", e.pass}};
        if (!e.witness.empty()) item["witness"] = e.witness;
        out.push_back(item);
    }
    return out;
}

inline json stab_element_to_json(const StabElement& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back(json{{"coeff", c}, {"vars", monomial_to_json(m)}});
    return terms;
}

/// Presentation export, the input format for downstream cobar tooling.
inline json stab_presentation_to_json(const StabPresentation& pres) {
    const RingParams& r = pres.alg.ring;
    json gens = json::array();
    json rels = json::array();
    for (long long i = 1; i <= pres.alg.imax; ++i) {
        gens.push_back("t" + std::to_string(i));
        rels.push_back("t" + std::to_string(i) + "^" + std::to_string(qpow(r, pres.alg.h)) +
                       " = t" + std::to_string(i));
    }
    json cop = json::object();
    for (size_t i = 0; i < pres.coproducts.size(); ++i)
        cop["t" + std::to_string(i + 1)] = stab_element_to_json(pres.coproducts[i]);
    return json{{"p", r.p},
                {"e", r.e},
                {"f", r.f},
                {"h", pres.alg.h},
                {"imax", pres.alg.imax},
                {"generators", gens},
                {"relations", rels},
                {"coproducts", cop}};
}

}  // namespace famod
