#include "hs/monotone.hpp"

#include "hs/errors.hpp"
#include "hs/linsolve.hpp"
#include "hs/oracle.hpp"
#include "hs/permutation.hpp"
#include "hs/set_partitions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

namespace hs {

std::string to_string(Normalisation n) { return n == Normalisation::definition ? "definition" : "fixed-target"; }

Normalisation parse_normalisation(const std::string& s) {
    if (s == "definition") return Normalisation::definition;
    if (s == "fixed-target" || s == "fixed_target") return Normalisation::fixed_target;
    throw ParseError("unknown normalisation '" + s + "' (expected definition or fixed-target)");
}

Rational MonotoneModel::operator()(long k) const {
    Rational v = C0 * Rational(k);
    for (const auto& [m, c] : C) v += c * Rational(ipow(m, static_cast<unsigned long>(k)));
    return v;
}

namespace {

std::vector<int> sorted_desc(std::vector<int> mu) {
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return mu;
}

int degree_of(const std::vector<int>& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

long k_index(const std::vector<int>& mu, int g) {
    return static_cast<long>(degree_of(mu)) + 2L * g - 2 + static_cast<long>(mu.size());
}

Integer prod_parts(const std::vector<int>& mu) {
    Integer p = 1;
    for (int x : mu) p *= x;
    return p;
}

Rational aut_over_factorial(const std::vector<int>& mu) {
    Rational w(Integer(static_cast<unsigned long>(automorphisms(mu))), factorial(static_cast<unsigned long>(degree_of(mu))));
    w.canonicalize();
    return w;
}

// Connected monotone numbers (definition normalisation) for k = 0..max_k.
// Monotone tuples on disjoint supports merge into a monotone tuple in exactly
// one way, so disconnected counts are ordinary (not binomial) convolutions
// of connected ones over the blocks of a set partition of the parts.
std::vector<Rational> connected_series(const std::vector<int>& mu, int max_k) {
    static std::recursive_mutex lock;
    static std::map<std::vector<int>, std::vector<Rational>> memo;
    std::lock_guard guard(lock);
    if (auto it = memo.find(mu); it != memo.end() && static_cast<int>(it->second.size()) > max_k)
        return {it->second.begin(), it->second.begin() + max_k + 1};

    const int d = degree_of(mu);
    const auto totals = monotone_class_totals(d, max_k);
    const std::size_t cls = SymmetricGroup::get(d).class_index(mu);
    const Rational w = aut_over_factorial(mu);

    std::vector<Rational> out(static_cast<std::size_t>(max_k + 1));
    for (int k = 0; k <= max_k; ++k) out[static_cast<std::size_t>(k)] = w * Rational(totals[static_cast<std::size_t>(k)][cls]);

    for_each_set_partition(static_cast<int>(mu.size()), [&](const std::vector<std::vector<int>>& blocks) {
        if (blocks.size() == 1) return;
        std::vector<Rational> conv(static_cast<std::size_t>(max_k + 1), Rational(0));
        conv[0] = 1;
        for (const auto& b : blocks) {
            std::vector<int> sub;
            for (int i : b) sub.push_back(mu[static_cast<std::size_t>(i)]);
            const std::vector<Rational> s = connected_series(sorted_desc(std::move(sub)), max_k);
            std::vector<Rational> next(conv.size(), Rational(0));
            for (int a = 0; a <= max_k; ++a) {
                if (conv[static_cast<std::size_t>(a)] == 0) continue;
                for (int c = 0; a + c <= max_k; ++c)
                    if (s[static_cast<std::size_t>(c)] != 0)
                        next[static_cast<std::size_t>(a + c)] += conv[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>(c)];
            }
            conv = std::move(next);
        }
        for (int k = 0; k <= max_k; ++k) out[static_cast<std::size_t>(k)] -= conv[static_cast<std::size_t>(k)];
    });
    memo[mu] = out;
    return out;
}

void validate_profile(const std::vector<int>& mu) {
    if (mu.empty()) throw InvalidQuery("empty profile");
    for (int p : mu)
        if (p <= 0) throw InvalidQuery("profile parts must be positive");
}

Rational normalise(const std::vector<int>& mu, const Rational& definition_value, Normalisation n) {
    return n == Normalisation::definition ? definition_value : definition_value * Rational(prod_parts(mu));
}

}  // namespace

Rational monotone_hurwitz(const std::vector<int>& mu_in, int g, Normalisation n) {
    validate_profile(mu_in);
    if (g < 0) return 0;
    const std::vector<int> mu = sorted_desc(mu_in);
    const long k = k_index(mu, g);
    if (k > 64) throw BudgetExceeded("monotone DP supports k <= 64, got " + std::to_string(k));
    const auto series = connected_series(mu, static_cast<int>(k));
    return normalise(mu, series[static_cast<std::size_t>(k)], n);
}

Rational monotone_hurwitz_exhaustive(const std::vector<int>& mu_in, int g, Normalisation n, std::uint64_t budget) {
    validate_profile(mu_in);
    if (g < 0) return 0;
    const std::vector<int> mu = sorted_desc(mu_in);
    FactorizationQuery q;
    q.d = degree_of(mu);
    q.mu = mu;
    q.k = static_cast<int>(k_index(mu, g));
    q.transitive = true;
    q.monotone = true;
    const OracleResult r = count_factorizations(q, Exec::parallel, budget);
    return normalise(mu, r.weighted, n);
}

MonotoneModel fit_exp_linear(const std::vector<std::pair<long, Rational>>& values, int d) {
    if (d < 2) throw InvalidQuery("the exponential-plus-linear model needs d >= 2");
    if (static_cast<int>(values.size()) < d)
        throw InvalidQuery("need " + std::to_string(d) + " data points, got " + std::to_string(values.size()));
    std::set<long> ks;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int i = 0; i < d; ++i) {
        const auto& [k, v] = values[static_cast<std::size_t>(i)];
        if (!ks.insert(k).second) throw SingularSystem("repeated k = " + std::to_string(k));
        std::vector<Rational> row{Rational(k)};
        for (int m = 1; m < d; ++m) row.emplace_back(ipow(m, static_cast<unsigned long>(k)));
        A.push_back(std::move(row));
        b.push_back(v);
    }
    const std::vector<Rational> x = solve_linear(std::move(A), std::move(b));
    MonotoneModel model;
    model.C0 = x[0];
    for (int m = 1; m < d; ++m) model.C[m] = x[static_cast<std::size_t>(m)];
    return model;
}

MonotoneReport verify_conjecture(const std::vector<int>& mu_in, int g_max, Normalisation n) {
    validate_profile(mu_in);
    const std::vector<int> mu = sorted_desc(mu_in);
    const int d = degree_of(mu);
    if (d < 2) throw InvalidQuery("the exponential-plus-linear model needs d >= 2");
    if (g_max < d - 1) throw InvalidQuery("g_max must be at least d - 1 to fit the model");
    MonotoneReport rep;
    rep.mu = mu;
    rep.normalisation = n;
    std::vector<std::pair<long, Rational>> data;
    for (int g = 0; g <= g_max; ++g) {
        MonotonePoint p;
        p.g = g;
        p.k = k_index(mu, g);
        p.value = monotone_hurwitz(mu, g, n);
        const Rational def = monotone_hurwitz(mu, g, Normalisation::definition);
        const Rational fixed = monotone_hurwitz(mu, g, Normalisation::fixed_target);
        if (fixed != def * Rational(prod_parts(mu))) rep.bridge_holds = false;
        data.emplace_back(p.k, p.value);
        rep.points.push_back(std::move(p));
    }
    rep.model = fit_exp_linear(data, d);
    rep.model.mu = mu;
    rep.model.normalisation = n;
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
        MonotonePoint& p = rep.points[i];
        p.fitted = static_cast<int>(i) < d;
        p.predicted = rep.model(p.k);
        p.pass = p.predicted == p.value;
        rep.all_pass = rep.all_pass && p.pass;
    }
    return rep;
}

}  // namespace hs
