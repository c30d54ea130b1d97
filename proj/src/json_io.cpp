#include "hs/json_io.hpp"

#include "hs/errors.hpp"

namespace hs {

Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_string(c)}));
    return Json{{"exponents", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
    try {
        std::vector<std::pair<int, Rational>> terms;
        for (const auto& t : j.at("exponents")) terms.emplace_back(t.at(0).get<int>(), parse_rational(t.at(1).get<std::string>()));
        return LaurentPoly::from_terms(std::move(terms));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("Laurent polynomial JSON: ") + e.what());
    }
}

Json to_json(const ExpCombo& c) {
    Json terms = Json::object();
    for (const auto& [m, v] : c.terms) terms[std::to_string(m)] = to_string(v);
    Json j{{"parity", to_string(c.parity)}, {"terms", terms}};
    j["m0"] = c.m0 ? Json(to_string(*c.m0)) : Json(nullptr);
    return j;
}

ExpCombo exp_combo_from_json(const Json& j) {
    try {
        ExpCombo c;
        const std::string parity = j.at("parity").get<std::string>();
        if (parity != "odd" && parity != "even") throw ParseError("parity must be odd or even");
        c.parity = parity == "odd" ? Parity::odd : Parity::even;
        for (const auto& [m, v] : j.at("terms").items()) c.terms[std::stoi(m)] = parse_rational(v.get<std::string>());
        if (j.contains("m0") && !j.at("m0").is_null()) c.m0 = parse_rational(j.at("m0").get<std::string>());
        return c;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("exponential combination JSON: ") + e.what());
    }
}

Json to_json(const CorrelatorResult& r) {
    Json j;
    if (r.qproducts) {
        Json arr = Json::array();
        for (const QProductTerm& t : *r.qproducts) {
            Json term{{"coeff", to_string(t.product.coeff)}, {"factors", t.product.factors}};
            if (t.divisor != 0) term["divisor"] = t.divisor;
            arr.push_back(std::move(term));
        }
        j["qproducts"] = std::move(arr);
    } else {
        j["qproducts"] = nullptr;
    }
    if (auto p = r.value.to_laurent()) {
        j["laurent"] = to_json(*p);
    } else {
        j["laurent"] = nullptr;
        j["value"] = r.value.to_string();
    }
    j["max_score"] = r.trace ? Json(r.trace->max_score) : Json(nullptr);
    return j;
}

Json to_json(const StructureTable& t) {
    Json c = Json::object();
    for (const auto& [m, v] : t.combo.terms) c[std::to_string(m)] = to_string(v);
    Json j{{"mu", t.mu}, {"r", t.r}, {"prefactor", to_string(t.prefactor)}, {"C", c}};
    j["parity"] = to_string(t.combo.parity);
    j["m0"] = t.combo.m0 ? Json(to_string(*t.combo.m0)) : Json(nullptr);
    return j;
}

StructureTable structure_table_from_json(const Json& j) {
    try {
        StructureTable t;
        t.mu = j.at("mu").get<std::vector<int>>();
        t.r = j.at("r").get<int>();
        t.prefactor = parse_rational(j.at("prefactor").get<std::string>());
        Json combo{{"parity", j.at("parity")}, {"terms", j.at("C")}, {"m0", j.at("m0")}};
        t.combo = exp_combo_from_json(combo);
        return t;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("structure table JSON: ") + e.what());
    }
}

Json to_json(const FactorizationQuery& q, const OracleResult& r) {
    return Json{{"query", q.to_string()}, {"count", to_string(r.count)}, {"weighted", to_string(r.weighted)},
                {"method", r.method}};
}

Json to_json(const MonotoneReport& r) {
    Json c = Json::object();
    for (const auto& [m, v] : r.model.C) c[std::to_string(m)] = to_string(v);
    Json validated = Json::array();
    for (const auto& p : r.points)
        if (!p.fitted && p.pass) validated.push_back(p.g);
    return Json{{"mu", r.mu},
                {"normalisation", to_string(r.normalisation)},
                {"model", Json{{"C0", to_string(r.model.C0)}, {"C", c}}},
                {"validated_g", validated},
                {"all_pass", r.all_pass}};
}

}  // namespace hs
