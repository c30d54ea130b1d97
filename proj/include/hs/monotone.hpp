#pragma once

#include "hs/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hs {

/// definition: |Aut(mu)|/d! times the number of transitive monotone tuples
/// with product of cycle type mu. fixed_target: the number of transitive
/// monotone tuples whose product is one fixed permutation of type mu, which
/// is prod mu_i times the former.
enum class Normalisation { definition, fixed_target };

std::string to_string(Normalisation n);
Normalisation parse_normalisation(const std::string& s);  // throws ParseError

/// C0 * k + sum_{m=1}^{d-1} C(m) m^k.
struct MonotoneModel {
    std::vector<int> mu;
    Rational C0;
    std::map<int, Rational> C;  // m -> C(m), zeros kept for every 1 <= m <= d-1
    Normalisation normalisation = Normalisation::fixed_target;

    Rational operator()(long k) const;
    friend bool operator==(const MonotoneModel& a, const MonotoneModel& b) {
        return a.mu == b.mu && a.C0 == b.C0 && a.C == b.C;
    }
};

/// Monotone Hurwitz number for k = d + 2g - 2 + n simple branch points,
/// connected counts obtained from the dynamic-programming class totals by
/// inclusion-exclusion over set partitions of the parts. Zero for g < 0.
Rational monotone_hurwitz(const std::vector<int>& mu, int g, Normalisation n = Normalisation::fixed_target);

/// The same number from exhaustive enumeration of transitive monotone
/// tuples. Throws BudgetExceeded above budget.
Rational monotone_hurwitz_exhaustive(const std::vector<int>& mu, int g, Normalisation n = Normalisation::fixed_target,
                                     std::uint64_t budget = 20'000'000);

/// Solves for (C0, C(1), ..., C(d-1)) through the first d points. Throws
/// SingularSystem when the points do not determine the model (repeated k)
/// and InvalidQuery when fewer than d points are given.
MonotoneModel fit_exp_linear(const std::vector<std::pair<long, Rational>>& values, int d);

struct MonotonePoint {
    int g = 0;
    long k = 0;
    Rational value;
    Rational predicted;
    bool fitted = false;  // used to determine the model
    bool pass = false;
};

struct MonotoneReport {
    std::vector<int> mu;
    Normalisation normalisation = Normalisation::fixed_target;
    MonotoneModel model;
    std::vector<MonotonePoint> points;
    bool all_pass = true;
    /// fixed_target value equals prod mu_i times the definition value at
    /// every point.
    bool bridge_holds = true;
};

/// Fits the model on g = 0 .. d-1 and checks every g up to g_max.
MonotoneReport verify_conjecture(const std::vector<int>& mu, int g_max,
                                 Normalisation n = Normalisation::fixed_target);

}  // namespace hs
