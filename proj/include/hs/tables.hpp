#pragma once

#include "hs/monotone.hpp"
#include "hs/qint_product.hpp"

#include <string>
#include <vector>

namespace hs {

/// Reference copies of the correlator, structure-coefficient and monotone
/// tables for 2 <= |mu| <= 5, embedded from data/golden_tables.json at build
/// time.
struct GoldenTables {
    struct Correlator {
        std::vector<int> mu;
        std::string expression;  // sum of q-integer products
    };
    struct Coefficients {
        std::vector<int> mu;
        std::vector<Integer> C;  // C(mu, m) for m = 1 .. d(d-1)/2
    };
    std::vector<Correlator> correlators;
    std::vector<Coefficients> coefficients;
    std::vector<MonotoneModel> monotone;  // fixed-target normalisation
};

/// Throws ParseError.
GoldenTables parse_golden_tables(const std::string& json_text);
const GoldenTables& embedded_golden_tables();

struct TableRow {
    std::vector<int> mu;
    std::string computed;
    std::string expected;
    bool match = false;
};

struct TableReport {
    int which = 0;
    std::vector<TableRow> rows;
    bool all_match() const;
};

/// Recomputes table 1 (connected correlators, compared after expansion),
/// 2 (structure coefficients, exact) or 3 (monotone models fitted and
/// validated for g = 0..20, exact). Throws InvalidQuery for other numbers.
TableReport reproduce_table(int which, const GoldenTables& golden = embedded_golden_tables());

std::string mu_to_string(const std::vector<int>& mu);  // "2,1,1"
std::string mu_compact(const std::vector<int>& mu);    // "211"
/// Throws ParseError.
std::vector<int> parse_mu(const std::string& text);

}  // namespace hs
