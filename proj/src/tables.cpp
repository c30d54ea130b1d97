#include "hs/tables.hpp"

#include "hs/correlator.hpp"
#include "hs/errors.hpp"
#include "hs/hurwitz.hpp"
#include "hs/json_io.hpp"

#include <numeric>
#include <sstream>

namespace hs {

extern const char* const embedded_golden_json;

std::string mu_to_string(const std::vector<int>& mu) {
    std::string s;
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
    return s;
}

std::string mu_compact(const std::vector<int>& mu) {
    std::string s;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i && (mu[i] > 9 || mu[i - 1] > 9)) s += ",";
        s += std::to_string(mu[i]);
    }
    return s;
}

std::vector<int> parse_mu(const std::string& text) {
    std::vector<int> mu;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, item.find_last_not_of(" \t") - first + 1);
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v <= 0) throw std::invalid_argument(item);
            mu.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("profile '" + text + "': part " + std::to_string(mu.size() + 1) + " '" + item +
                             "' is not a positive integer");
        }
    }
    if (mu.empty()) throw ParseError("empty profile");
    return mu;
}

GoldenTables parse_golden_tables(const std::string& json_text) {
    try {
        const Json j = Json::parse(json_text);
        GoldenTables g;
        for (const auto& row : j.at("table1"))
            g.correlators.push_back({row.at("mu").get<std::vector<int>>(), row.at("correlator").get<std::string>()});
        for (const auto& row : j.at("table2")) {
            GoldenTables::Coefficients c;
            c.mu = row.at("mu").get<std::vector<int>>();
            for (const auto& v : row.at("C")) c.C.emplace_back(v.get<long>());
            g.coefficients.push_back(std::move(c));
        }
        for (const auto& row : j.at("table3")) {
            MonotoneModel m;
            m.mu = row.at("mu").get<std::vector<int>>();
            m.C0 = parse_rational(row.at("C0").get<std::string>());
            const int d = std::accumulate(m.mu.begin(), m.mu.end(), 0);
            for (int k = 1; k < d; ++k) m.C[k] = 0;
            for (const auto& [k, v] : row.at("C").items()) m.C[std::stoi(k)] = parse_rational(v.get<std::string>());
            g.monotone.push_back(std::move(m));
        }
        return g;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("golden tables: ") + e.what());
    }
}

const GoldenTables& embedded_golden_tables() {
    static const GoldenTables g = parse_golden_tables(embedded_golden_json);
    return g;
}

bool TableReport::all_match() const {
    for (const auto& r : rows)
        if (!r.match) return false;
    return !rows.empty();
}

namespace {

std::string dense_string(const std::vector<Integer>& C) {
    std::string s;
    for (std::size_t i = 0; i < C.size(); ++i) s += (i ? " " : "") + C[i].get_str();
    return s;
}

std::string model_string(const MonotoneModel& m) {
    std::string s;
    for (auto it = m.C.rbegin(); it != m.C.rend(); ++it) {
        if (it->second == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(it->second) + ")*" + std::to_string(it->first) + "^k";
    }
    if (m.C0 != 0) s += (s.empty() ? "" : " + ") + std::string("(") + to_string(m.C0) + ")*k";
    return s.empty() ? "0" : s;
}

}  // namespace

TableReport reproduce_table(int which, const GoldenTables& golden) {
    TableReport rep;
    rep.which = which;
    if (which == 1) {
        for (const auto& row : golden.correlators) {
            CorrelatorOptions opt;
            opt.keep_qproducts = true;
            const CorrelatorResult r = connected(OperatorWord::hurwitz(row.mu), opt);
            TableRow t{row.mu, r.qproduct_string(), row.expression, false};
            t.match = r.laurent() == expand(parse_qproduct_sum(row.expression));
            rep.rows.push_back(std::move(t));
        }
    } else if (which == 2) {
        for (const auto& row : golden.coefficients) {
            const StructureTable& s = structure_coefficients(row.mu);
            const std::vector<Integer> dense = s.dense();
            rep.rows.push_back({row.mu, dense_string(dense), dense_string(row.C), dense == row.C});
        }
    } else if (which == 3) {
        for (const auto& model : golden.monotone) {
            const MonotoneReport r = verify_conjecture(model.mu, 20, Normalisation::fixed_target);
            rep.rows.push_back({model.mu, model_string(r.model), model_string(model), r.all_pass && r.model == model});
        }
    } else {
        throw InvalidQuery("tables are numbered 1, 2 and 3");
    }
    return rep;
}

}  // namespace hs
