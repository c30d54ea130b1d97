#pragma once

// Seeded generators for the property tests. Every test draws from its own
// fixed seed so failures reproduce.

#include "hs/correlator.hpp"
#include "hs/laurent.hpp"
#include "hs/partition.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace gen {

class Source {
public:
    explicit Source(std::uint32_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    hs::Rational rational(int bound = 9) {
        hs::Rational q(integer(-bound, bound), integer(1, bound));
        q.canonicalize();
        return q;
    }

    hs::LaurentPoly laurent(int max_terms = 4, int max_exp = 6) {
        std::vector<hs::LaurentPoly::Term> terms;
        const int n = integer(0, max_terms);
        for (int i = 0; i < n; ++i) terms.emplace_back(integer(-max_exp, max_exp), rational());
        return hs::LaurentPoly::from_terms(std::move(terms));
    }

    hs::LaurentPoly nonzero_laurent(int max_terms = 3, int max_exp = 4) {
        for (;;) {
            hs::LaurentPoly p = laurent(max_terms, max_exp);
            if (!p.is_zero()) return p;
        }
    }

    hs::Partition partition(int max_size) {
        const int n = integer(0, max_size);
        std::vector<int> parts;
        for (int left = n; left > 0;) {
            const int p = integer(1, left);
            parts.push_back(p);
            left -= p;
        }
        return hs::Partition::from_unsorted(parts);
    }

    std::vector<int> profile(int min_size, int max_size) {
        const hs::Partition p = partition(max_size);
        if (p.size() < min_size) return profile(min_size, max_size);
        std::vector<int> mu = p.parts();
        std::shuffle(mu.begin(), mu.end(), rng_);
        return mu;
    }

    // A legal word with subscripts summing to zero, so the vacuum
    // expectation can be nonzero.
    hs::OperatorWord balanced_word(int max_len, int max_a, int max_b) {
        for (;;) {
            const int len = integer(2, max_len);
            std::vector<hs::Op> ops;
            int sum = 0;
            for (int i = 0; i + 1 < len; ++i) {
                const int a = integer(-max_a, max_a);
                ops.push_back({a, a >= 0 ? integer(1, max_b) : integer(0, max_b)});
                sum += a;
            }
            const int a = -sum;
            if (a < -max_a - 2 || a > max_a + 2) continue;
            ops.push_back({a, a >= 0 ? integer(1, max_b) : integer(0, max_b)});
            return hs::OperatorWord(ops);
        }
    }

    template <class T>
    void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), rng_); }

private:
    std::mt19937 rng_;
};

}  // namespace gen
