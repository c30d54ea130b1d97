#include "hs/hurwitz.hpp"

#include "hs/correlator.hpp"
#include "hs/errors.hpp"
#include "hs/set_partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace hs {

int HurwitzQuery::degree() const { return std::accumulate(mu.begin(), mu.end(), 0); }

long HurwitzQuery::k() const {
    return static_cast<long>(degree() / r) + 2L * g - 2 + static_cast<long>(mu.size());
}

void HurwitzQuery::validate() const {
    if (mu.empty()) throw InvalidQuery("empty profile");
    for (int p : mu)
        if (p <= 0) throw InvalidQuery("profile parts must be positive");
    if (r < 1) throw InvalidQuery("r must be positive");
    if (degree() % r != 0)
        throw InvalidQuery("r = " + std::to_string(r) + " does not divide |mu| = " + std::to_string(degree()));
    if (!connected && r != 1) throw InvalidQuery("disconnected numbers are only available for r = 1");
}

Rational StructureTable::value_at(long k) const {
    if (k < 0) return 0;
    return prefactor * combo.series_coeff(static_cast<unsigned>(k)) / 2;
}

std::vector<Integer> StructureTable::dense() const {
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    const int hi = std::max(combo.top(), d * (d - 1) / 2);
    std::vector<Integer> out;
    for (int m = 1; m <= hi; ++m) out.push_back(combo.coeff(m).get_num());
    return out;
}

namespace {

Rational prefactor_for(const std::vector<int>& mu, int r) {
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    Integer den = ipow(r, static_cast<unsigned long>(d / r)) * factorial(static_cast<unsigned long>(d / r));
    for (int p : mu) den *= p;
    Rational out(2, den);
    out.canonicalize();
    return out;
}

StructureTable compute_table(const std::vector<int>& mu, int r) {
    const OperatorWord word = OperatorWord::hurwitz(mu, r);
    const LaurentPoly value = connected(word).laurent();
    StructureTable t;
    t.mu = mu;
    t.r = r;
    t.combo = to_exp_combo(value);
    t.prefactor = prefactor_for(mu, r);
    for (const auto& [m, c] : t.combo.terms)
        if (c.get_den() != 1)
            throw NonIntegerCoefficient("C(" + std::to_string(m) + ") = " + to_string(c) + " for profile of degree " +
                                        std::to_string(std::accumulate(mu.begin(), mu.end(), 0)));
    return t;
}

}  // namespace

const StructureTable& structure_coefficients(const std::vector<int>& mu_in, int r) {
    std::vector<int> mu = mu_in;
    std::sort(mu.begin(), mu.end(), std::greater<>());
    HurwitzQuery q{mu, 0, r, true};
    q.validate();
    static std::mutex lock;
    static std::map<std::pair<std::vector<int>, int>, std::unique_ptr<StructureTable>> memo;
    const auto key = std::make_pair(mu, r);
    {
        std::lock_guard guard(lock);
        auto it = memo.find(key);
        if (it != memo.end()) return *it->second;
    }
    auto table = std::make_unique<StructureTable>(compute_table(mu, r));
    std::lock_guard guard(lock);
    auto [it, inserted] = memo.try_emplace(key, std::move(table));
    return *it->second;
}

Rational hurwitz_number(const HurwitzQuery& q) {
    q.validate();
    const long k = q.k();
    if (!q.connected) {
        if (k < 0) return 0;
        const LaurentPoly corr = disconnected(OperatorWord::hurwitz(q.mu)).to_laurent().value();
        Integer norm = factorial(static_cast<unsigned long>(q.degree()));
        for (int p : q.mu) norm *= p;
        return Rational(factorial(static_cast<unsigned long>(k))) * hbar_coeff(corr, static_cast<unsigned>(k)) /
               Rational(norm);
    }
    if (q.g < 0) return 0;
    return structure_coefficients(q.mu, q.r).value_at(k);
}

Rational ClassicalHurwitz::value(int g) const {
    Rational sum = 0;
    for (const auto& [m, b] : B) sum += Rational(b * ipow(m, static_cast<unsigned long>(exponent(g))));
    const Integer df = factorial(static_cast<unsigned long>(d));
    Rational out = 2 * sum / Rational(df * df);
    return out;
}

ClassicalHurwitz classical_hurwitz(int d) {
    if (d < 2) throw InvalidQuery("classical Hurwitz numbers need d >= 2");
    const StructureTable& t = structure_coefficients(std::vector<int>(static_cast<std::size_t>(d), 1));
    ClassicalHurwitz out;
    out.d = d;
    for (auto it = t.combo.terms.rbegin(); it != t.combo.terms.rend(); ++it)
        out.B.emplace_back(it->first, it->second.get_num());
    return out;
}

Rational asymptotic_estimate(const HurwitzQuery& q) {
    q.validate();
    const int d = q.degree();
    const long k = q.k();
    if (k < 0) return 0;
    return prefactor_for(q.mu, q.r) * Rational(ipow(d * (d - 1) / 2, static_cast<unsigned long>(k)));
}

AsymptoticReport asymptotics(const HurwitzQuery& q) {
    AsymptoticReport rep;
    rep.exact = hurwitz_number(q);
    rep.estimate = asymptotic_estimate(q);
    if (rep.exact == 0) throw InvalidQuery("Hurwitz number is zero; ratio undefined");
    return rep;
}

GapReport check_gap_conjecture(const std::vector<int>& mu) {
    const StructureTable& t = structure_coefficients(mu);
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    GapReport rep;
    rep.mu = mu;
    rep.window_lo = (d - 1) * (d - 2) / 2;
    rep.window_hi = d * (d - 1) / 2;
    rep.top_coefficient = t.combo.coeff(rep.window_hi).get_num();
    for (int m = rep.window_lo + 1; m < rep.window_hi; ++m) {
        if (t.combo.coeff(m) != 0) {
            rep.holds = false;
            rep.offending_m = m;
            break;
        }
    }
    return rep;
}

Rational disconnected_from_connected(const std::vector<int>& mu, long k) {
    if (k < 0) return 0;
    const int n = static_cast<int>(mu.size());
    Rational total = 0;
    for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        // Connected generating functions per block; the product of
        // exponential generating functions gives multinomial weights.
        std::vector<const StructureTable*> tables;
        for (const auto& block : blocks) {
            std::vector<int> sub;
            for (int i : block) sub.push_back(mu[static_cast<std::size_t>(i)]);
            std::sort(sub.begin(), sub.end(), std::greater<>());
            tables.push_back(&structure_coefficients(sub));
        }
        // dp[j] = sum over k_1 + ... + k_b = j of prod H_i(k_i) / k_i!
        std::vector<Rational> dp(static_cast<std::size_t>(k + 1), Rational(0));
        dp[0] = 1;
        for (const StructureTable* t : tables) {
            std::vector<Rational> next(dp.size(), Rational(0));
            for (long j = 0; j <= k; ++j) {
                if (dp[static_cast<std::size_t>(j)] == 0) continue;
                for (long i = 0; i + j <= k; ++i) {
                    const Rational h = t->value_at(i);
                    if (h == 0) continue;
                    next[static_cast<std::size_t>(i + j)] +=
                        dp[static_cast<std::size_t>(j)] * h / Rational(factorial(static_cast<unsigned long>(i)));
                }
            }
            dp = std::move(next);
        }
        total += dp[static_cast<std::size_t>(k)] * Rational(factorial(static_cast<unsigned long>(k)));
    });
    return total;
}

std::vector<DisconnectedEntry> disconnected_hurwitz_series(const std::vector<int>& mu, int max_g) {
    HurwitzQuery q{mu, 0, 1, false};
    q.validate();
    const int d = q.degree();
    const int n = static_cast<int>(mu.size());
    // Smallest g with k = d + 2g - 2 + n >= 0.
    int g = -((d + n - 2) / 2);
    std::vector<DisconnectedEntry> out;
    for (; g <= max_g; ++g) {
        q.g = g;
        const Rational direct = hurwitz_number(q);
        const Rational summed = disconnected_from_connected(mu, q.k());
        if (direct != summed)
            throw ConsistencyFailure("disconnected H at g = " + std::to_string(g) + ": correlator gives " +
                                     to_string(direct) + ", set-partition sum gives " + to_string(summed));
        out.push_back({g, direct});
    }
    return out;
}

}  // namespace hs
