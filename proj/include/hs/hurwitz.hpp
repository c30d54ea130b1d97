#pragma once

#include "hs/exp_combo.hpp"
#include "hs/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hs {

struct HurwitzQuery {
    std::vector<int> mu;
    int g = 0;
    int r = 1;
    bool connected = true;

    int degree() const;
    /// k = d/r + 2g - 2 + n, the number of simple branch points.
    long k() const;
    /// Throws InvalidQuery for an empty profile, non-positive parts, r < 1
    /// or r not dividing |mu|.
    void validate() const;
};

/// H_{g;mu}^{[r]} = prefactor * sum_m C(m) m^k for every g >= 0.
struct StructureTable {
    std::vector<int> mu;
    int r = 1;
    ExpCombo combo;      // C(mu, m)
    Rational prefactor;  // 2 / (r^{d/r} (d/r)! mu_1 ... mu_n)

    /// prefactor * sum_m C(m) m^k including the k = 0 constant term, i.e.
    /// k!/(|Aut|-free normalisation) times the hbar^k coefficient of the
    /// generating function. Defined for every k >= 0, also below the
    /// smallest admissible genus.
    Rational value_at(long k) const;
    /// C(mu, m) for m = 1 .. max(top, d(d-1)/2), zeros included.
    std::vector<Integer> dense() const;
};

/// Evaluates the connected correlator of E_r(r hbar)^{d/r} E_{-mu_1}(0) ...
/// and reads off the integer coefficients. Memoised per (mu, r).
/// Throws InvalidQuery, NonIntegerCoefficient (a bug if it ever fires).
const StructureTable& structure_coefficients(const std::vector<int>& mu, int r = 1);

/// Exact H_{g;mu}^{[r]}, or the disconnected H^bullet when q.connected is
/// false (r = 1 only). Connected numbers vanish for g < 0.
Rational hurwitz_number(const HurwitzQuery& q);

struct ClassicalHurwitz {
    int d = 0;
    std::vector<std::pair<int, Integer>> B;  // (m, B(d,m)), m descending, nonzero only
    /// Hur_{g,d} = 2/d!^2 sum_m B(d,m) m^{2d+2g-2}.
    Rational value(int g) const;
    long exponent(int g) const { return 2L * d + 2L * g - 2; }
};

/// Throws InvalidQuery for d < 2.
ClassicalHurwitz classical_hurwitz(int d);

struct AsymptoticReport {
    Rational exact;
    Rational estimate;  // prefactor * (d(d-1)/2)^k
    Rational estimate_over_exact() const { return estimate / exact; }
    Rational exact_over_estimate() const { return exact / estimate; }
};

/// prefactor * (d(d-1)/2)^k.
Rational asymptotic_estimate(const HurwitzQuery& q);
AsymptoticReport asymptotics(const HurwitzQuery& q);

struct GapReport {
    std::vector<int> mu;
    int window_lo = 0;  // exclusive: (d-1)(d-2)/2
    int window_hi = 0;  // exclusive: d(d-1)/2
    bool holds = true;
    std::optional<int> offending_m;
    Integer top_coefficient;
};

/// Checks C(mu, m) = 0 for (d-1)(d-2)/2 < m < d(d-1)/2 and records the top
/// coefficient.
GapReport check_gap_conjecture(const std::vector<int>& mu);

struct DisconnectedEntry {
    int g = 0;
    Rational value;
};

/// H^bullet_{g;mu} for g from the smallest genus with k >= 0 up to max_g,
/// computed from the disconnected correlator and from the set-partition sum
/// of connected numbers. Throws ConsistencyFailure if they differ.
std::vector<DisconnectedEntry> disconnected_hurwitz_series(const std::vector<int>& mu, int max_g);

/// H^bullet via the set-partition sum of connected numbers at k simple
/// branch points.
Rational disconnected_from_connected(const std::vector<int>& mu, long k);

}  // namespace hs
