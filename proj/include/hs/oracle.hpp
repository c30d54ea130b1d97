#pragma once

#include "hs/permutation.hpp"
#include "hs/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hs {

/// Execution mode of the permutation kernels. The serial versions are the
/// reference implementations; the parallel ones use OpenMP.
enum class Exec { serial, parallel };

inline constexpr std::uint64_t default_budget = 100'000'000;

/// Tuples (tau_1, ..., tau_k) of transpositions in S_d whose product
/// tau_1 ... tau_k (or alpha tau_1 ... tau_k when orbifold_r is set, with
/// alpha ranging over the class (r, ..., r)) has cycle type mu, or equals
/// fixed_target when that is given.
struct FactorizationQuery {
    int d = 0;
    std::vector<int> mu;
    std::optional<Permutation> fixed_target;
    int k = 0;
    bool transitive = false;
    bool monotone = false;
    std::optional<int> orbifold_r;

    /// Throws InvalidQuery.
    void validate() const;
    std::string to_string() const;
};

struct OracleResult {
    Integer count;
    /// |Aut(mu)|/d! * count for class targets; count for fixed targets.
    Rational weighted;
    std::string method;  // "exhaustive", "convolution" or "dp"
};

/// Enumerates every k-tuple. Transitivity means the transpositions (and
/// the cycles of alpha) connect {0..d-1}. Throws BudgetExceeded when the
/// number of tuples exceeds budget.
OracleResult count_factorizations(const FactorizationQuery& q, Exec exec = Exec::parallel,
                                  std::uint64_t budget = default_budget);

/// Non-transitive count by repeated multiplication with the transposition
/// class sum in the group algebra of S_d. Throws DegreeTooLarge for d > 7.
Integer count_by_convolution(int d, const std::vector<int>& mu, int k, Exec exec = Exec::parallel);

/// For each class of S_d (SymmetricGroup::classes() order), the number of
/// k-tuples of transpositions with product in that class.
std::vector<Integer> class_totals_by_convolution(int d, int k, Exec exec = Exec::parallel);

/// Weighted connected count |Aut(mu)|/d! * (transitive count), obtained from
/// convolution counts of all sub-profiles by inverting the set-partition
/// relation between disconnected and connected counts.
Rational connected_count(int d, const std::vector<int>& mu, int k);

/// Number of monotone k-tuples with product equal to the permutation
/// with_cycle_type(mu) (fixed_target) or with product of cycle type mu
/// (class sum). Non-transitive; dynamic programming over the largest
/// moved symbol. Throws BudgetExceeded for d > 7 or k > 64.
Integer monotone_count(int d, const std::vector<int>& mu, int k, bool fixed_target);

/// Monotone tuples with product cycle type mu for k = 0..max_k, one vector
/// per class of S_d (indexed like SymmetricGroup::classes()).
std::vector<std::vector<Integer>> monotone_class_totals(int d, int max_k);

struct OrbifoldCount {
    Integer raw;  // transitive tuples (alpha, tau_1, ..., tau_k)
    Rational calibration;  // |Aut(mu)|/d!, fixed by the r = 1 reduction
    Rational weighted;
};

/// Exhaustive orbifold count. Throws InvalidQuery unless r divides d,
/// BudgetExceeded above budget.
OrbifoldCount orbifold_count(int d, int r, const std::vector<int>& mu, int k, Exec exec = Exec::parallel,
                             std::uint64_t budget = default_budget);

/// Non-transitive orbifold count by convolution starting from the class
/// (r, ..., r). Equals the transitive count when mu = (d).
Integer orbifold_count_by_convolution(int d, int r, const std::vector<int>& mu, int k);

}  // namespace hs
