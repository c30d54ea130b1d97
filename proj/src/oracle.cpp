#include "hs/oracle.hpp"

#include "hs/errors.hpp"
#include "hs/set_partitions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hs {

void FactorizationQuery::validate() const {
    if (d < 1) throw InvalidQuery("degree must be positive");
    if (k < 0) throw InvalidQuery("number of transpositions must be non-negative");
    if (!fixed_target) {
        if (std::accumulate(mu.begin(), mu.end(), 0) != d) throw InvalidQuery("mu does not partition d");
        for (int p : mu)
            if (p <= 0) throw InvalidQuery("profile parts must be positive");
    } else if (fixed_target->degree() != d) {
        throw InvalidQuery("target permutation has the wrong degree");
    }
    if (orbifold_r) {
        if (*orbifold_r < 1 || d % *orbifold_r != 0) throw InvalidQuery("r must divide d");
        if (monotone) throw InvalidQuery("monotone orbifold counts are not supported");
    }
}

std::string FactorizationQuery::to_string() const {
    std::ostringstream os;
    os << "d=" << d << " k=" << k;
    if (fixed_target) {
        os << " target=" << fixed_target->to_string();
    } else {
        os << " mu=";
        for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
    }
    if (transitive) os << " transitive";
    if (monotone) os << " monotone";
    if (orbifold_r) os << " r=" << *orbifold_r;
    return os.str();
}

namespace {

Rational aut_over_factorial(const std::vector<int>& mu) {
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    Rational w(Integer(static_cast<unsigned long>(automorphisms(mu))), factorial(static_cast<unsigned long>(d)));
    w.canonicalize();
    return w;
}

std::vector<int> sorted_desc(std::vector<int> mu) {
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return mu;
}

// (-1)^k sign(alpha) must equal sign(mu) for any nonzero count.
void check_parity(const std::vector<int>& mu, int k, int alpha_sign, const Integer& count, const std::string& what) {
    const int parity = (k % 2 == 0 ? 1 : -1) * alpha_sign;
    if (count != 0 && parity != cycle_type_sign(mu))
        throw ConsistencyFailure(what + ": nonzero count for a product of the wrong parity");
}

struct UnionFind {
    std::vector<int> parent;
    int components;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
};

// Number of tuples the enumeration visits, as a double to avoid overflow.
double tuple_bound(int d, int k, bool monotone) {
    const auto ts = transpositions(d);
    if (!monotone) return std::pow(static_cast<double>(ts.size()), k);
    // Monotone tuples: complete homogeneous h_k(1, 2, ..., d-1).
    std::vector<double> h(static_cast<std::size_t>(k + 1), 0.0);
    h[0] = 1;
    for (int b = 1; b < d; ++b)
        for (int j = 1; j <= k; ++j) h[static_cast<std::size_t>(j)] += b * h[static_cast<std::size_t>(j - 1)];
    return h[static_cast<std::size_t>(k)];
}

std::vector<Permutation> class_elements(int d, const std::vector<int>& type) {
    const SymmetricGroup& G = SymmetricGroup::get(d);
    const std::size_t c = G.class_index(type);
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < G.order(); ++i)
        if (G.class_of(i) == c) out.push_back(G.element(i));
    return out;
}

class Enumerator {
public:
    Enumerator(const FactorizationQuery& q, const Permutation& alpha)
        : q_(q), alpha_(alpha), ts_(transpositions(q.d)), chosen_(static_cast<std::size_t>(q.k)) {
        if (!q.fixed_target) target_type_ = sorted_desc(q.mu);
    }

    // Tuples whose first transposition is ts_[first].
    std::uint64_t count_from(std::size_t first) {
        count_ = 0;
        std::vector<int> prod = alpha_.images();
        apply(prod, first);
        chosen_[0] = first;
        descend(1, prod);
        return count_;
    }

    std::uint64_t count_empty() {
        count_ = 0;
        std::vector<int> prod = alpha_.images();
        leaf(prod);
        return count_;
    }

private:
    void apply(std::vector<int>& prod, std::size_t t) const {
        // prod * (a b): swap the images of a and b.
        std::swap(prod[static_cast<std::size_t>(ts_[t].a)], prod[static_cast<std::size_t>(ts_[t].b)]);
    }

    void descend(int depth, std::vector<int>& prod) {
        if (depth == q_.k) {
            leaf(prod);
            return;
        }
        std::size_t start = 0;
        if (q_.monotone) {
            // Transpositions are ordered by b, so monotone continuations
            // start at the first one sharing the previous b.
            const int b = ts_[chosen_[static_cast<std::size_t>(depth - 1)]].b;
            start = static_cast<std::size_t>(b * (b - 1) / 2);
        }
        for (std::size_t t = start; t < ts_.size(); ++t) {
            chosen_[static_cast<std::size_t>(depth)] = t;
            apply(prod, t);
            descend(depth + 1, prod);
            apply(prod, t);
        }
    }

    void leaf(const std::vector<int>& prod) {
        if (q_.fixed_target) {
            if (prod != q_.fixed_target->images()) return;
        } else {
            if (Permutation(prod).cycle_type() != target_type_) return;
        }
        if (q_.transitive) {
            UnionFind uf(q_.d);
            for (int x = 0; x < q_.d; ++x) uf.unite(x, alpha_(x));
            for (int i = 0; i < q_.k; ++i) uf.unite(ts_[chosen_[static_cast<std::size_t>(i)]].a, ts_[chosen_[static_cast<std::size_t>(i)]].b);
            if (uf.components != 1) return;
        }
        ++count_;
    }

    const FactorizationQuery& q_;
    const Permutation& alpha_;
    std::vector<Transposition> ts_;
    std::vector<std::size_t> chosen_;
    std::vector<int> target_type_;
    std::uint64_t count_ = 0;
};

}  // namespace

OracleResult count_factorizations(const FactorizationQuery& q, Exec exec, std::uint64_t budget) {
    q.validate();
    std::vector<Permutation> alphas;
    if (q.orbifold_r) alphas = class_elements(q.d, std::vector<int>(static_cast<std::size_t>(q.d / *q.orbifold_r), *q.orbifold_r));
    else alphas.push_back(Permutation::identity(q.d));

    const double work = static_cast<double>(alphas.size()) * tuple_bound(q.d, q.k, q.monotone);
    if (work > static_cast<double>(budget))
        throw BudgetExceeded(q.to_string() + ": " + std::to_string(static_cast<long double>(work)) +
                             " tuples exceed the budget of " + std::to_string(budget));

    std::uint64_t total = 0;
    if (q.k == 0) {
        for (const Permutation& a : alphas) total += Enumerator(q, a).count_empty();
    } else {
        const std::size_t nt = transpositions(q.d).size();
        const long iterations = static_cast<long>(alphas.size() * nt);
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
            for (long it = 0; it < iterations; ++it) {
                const auto ai = static_cast<std::size_t>(it) / nt;
                Enumerator e(q, alphas[ai]);
                total += e.count_from(static_cast<std::size_t>(it) % nt);
            }
        } else {
            for (long it = 0; it < iterations; ++it) {
                const auto ai = static_cast<std::size_t>(it) / nt;
                Enumerator e(q, alphas[ai]);
                total += e.count_from(static_cast<std::size_t>(it) % nt);
            }
        }
    }

    OracleResult r;
    r.count = Integer(static_cast<unsigned long>(total));
    r.method = "exhaustive";
    const std::vector<int> type = q.fixed_target ? q.fixed_target->cycle_type() : sorted_desc(q.mu);
    const int alpha_sign = alphas.front().sign();
    check_parity(type, q.k, alpha_sign, r.count, q.to_string());
    r.weighted = q.fixed_target ? Rational(r.count) : Rational(r.count) * aut_over_factorial(q.mu);
    return r;
}

namespace {

std::vector<Integer> convolve(const SymmetricGroup& G, std::vector<Integer> v, int k, Exec exec) {
    const std::size_t n = G.order();
    const std::size_t nt = G.transpositions().size();
    for (int step = 0; step < k; ++step) {
        std::vector<Integer> next(n);
        if (exec == Exec::parallel) {
            // Pull form: pi = sigma * tau exactly when sigma = pi * tau.
#pragma omp parallel for schedule(static)
            for (long i = 0; i < static_cast<long>(n); ++i) {
                Integer s = 0;
                for (std::size_t t = 0; t < nt; ++t) s += v[G.times(static_cast<std::size_t>(i), t)];
                next[static_cast<std::size_t>(i)] = std::move(s);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (v[i] == 0) continue;
                for (std::size_t t = 0; t < nt; ++t) next[G.times(i, t)] += v[i];
            }
        }
        v = std::move(next);
    }
    return v;
}

std::vector<Integer> sum_by_class(const SymmetricGroup& G, const std::vector<Integer>& v) {
    std::vector<Integer> out(G.classes().size());
    for (std::size_t i = 0; i < G.order(); ++i) out[G.class_of(i)] += v[i];
    return out;
}

const SymmetricGroup& convolution_group(int d) {
    if (d > 7) throw DegreeTooLarge("convolution oracle supports d <= 7, got " + std::to_string(d));
    return SymmetricGroup::get(d);
}

}  // namespace

std::vector<Integer> class_totals_by_convolution(int d, int k, Exec exec) {
    const SymmetricGroup& G = convolution_group(d);
    std::vector<Integer> v(G.order());
    v[G.identity_rank()] = 1;
    return sum_by_class(G, convolve(G, std::move(v), k, exec));
}

Integer count_by_convolution(int d, const std::vector<int>& mu, int k, Exec exec) {
    if (std::accumulate(mu.begin(), mu.end(), 0) != d) throw InvalidQuery("mu does not partition d");
    const SymmetricGroup& G = convolution_group(d);
    const Integer c = class_totals_by_convolution(d, k, exec)[G.class_index(mu)];
    check_parity(sorted_desc(mu), k, 1, c, "convolution count");
    return c;
}

Rational connected_count(int d, const std::vector<int>& mu_in, int k) {
    if (std::accumulate(mu_in.begin(), mu_in.end(), 0) != d) throw InvalidQuery("mu does not partition d");
    if (k < 0) return 0;
    static std::recursive_mutex lock;
    static std::map<std::pair<int, int>, std::vector<Integer>> totals;  // (d, k) -> per-class counts
    static std::map<std::pair<std::vector<int>, int>, Rational> memo;
    std::lock_guard guard(lock);

    std::function<Rational(const std::vector<int>&, int)> conn = [&](const std::vector<int>& mu, int j) -> Rational {
        const auto key = std::make_pair(mu, j);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int dd = std::accumulate(mu.begin(), mu.end(), 0);
        auto& tot = totals[{dd, j}];
        if (tot.empty()) tot = class_totals_by_convolution(dd, j);
        const Rational disconnected = Rational(tot[SymmetricGroup::get(dd).class_index(mu)]) * aut_over_factorial(mu);

        // disconnected(mu, j) = sum over set partitions of the parts of
        // j!/prod j_i! prod connected(block_i, j_i); the single-block term is
        // the connected count itself.
        Rational others = 0;
        for_each_set_partition(static_cast<int>(mu.size()), [&](const std::vector<std::vector<int>>& blocks) {
            if (blocks.size() == 1) return;
            std::vector<std::vector<int>> subs;
            for (const auto& b : blocks) {
                std::vector<int> s;
                for (int i : b) s.push_back(mu[static_cast<std::size_t>(i)]);
                subs.push_back(sorted_desc(std::move(s)));
            }
            // dp over blocks of sum prod connected(sub_i, j_i) / j_i!
            std::vector<Rational> dp(static_cast<std::size_t>(j + 1), Rational(0));
            dp[0] = 1;
            for (const auto& s : subs) {
                std::vector<Rational> next(dp.size(), Rational(0));
                for (int a = 0; a <= j; ++a) {
                    if (dp[static_cast<std::size_t>(a)] == 0) continue;
                    for (int b = 0; a + b <= j; ++b) {
                        const Rational c = conn(s, b);
                        if (c == 0) continue;
                        next[static_cast<std::size_t>(a + b)] +=
                            dp[static_cast<std::size_t>(a)] * c / Rational(factorial(static_cast<unsigned long>(b)));
                    }
                }
                dp = std::move(next);
            }
            others += dp[static_cast<std::size_t>(j)] * Rational(factorial(static_cast<unsigned long>(j)));
        });
        const Rational value = disconnected - others;
        memo.emplace(key, value);
        return value;
    };
    return conn(sorted_desc(mu_in), k);
}

std::vector<std::vector<Integer>> monotone_class_totals(int d, int max_k) {
    if (d > 7 || max_k > 64) throw BudgetExceeded("monotone DP supports d <= 7 and k <= 64");
    static std::mutex lock;
    static std::map<int, std::vector<std::vector<Integer>>> memo;  // d -> [k][class]
    std::lock_guard guard(lock);
    auto& cached = memo[d];
    if (static_cast<int>(cached.size()) > max_k) return {cached.begin(), cached.begin() + max_k + 1};

    const SymmetricGroup& G = SymmetricGroup::get(d);
    const std::size_t n = G.order();
    // N[len][perm]: monotone tuples of length len using largest symbols
    // processed so far, with product perm.
    std::vector<std::vector<Integer>> N(static_cast<std::size_t>(max_k + 1), std::vector<Integer>(n));
    N[0][G.identity_rank()] = 1;
    for (int b = 1; b < d; ++b) {
        // Appending transpositions (a b), a < b, after all smaller b:
        // M[len] = N[len] + sum_a M[len-1] * (a b).
        const std::size_t first = static_cast<std::size_t>(b * (b - 1) / 2);
        const std::size_t last = first + static_cast<std::size_t>(b);
        for (int len = 1; len <= max_k; ++len) {
            const auto& prev = N[static_cast<std::size_t>(len - 1)];
            auto& cur = N[static_cast<std::size_t>(len)];
            for (std::size_t i = 0; i < n; ++i) {
                if (prev[i] == 0) continue;
                for (std::size_t t = first; t < last; ++t) cur[G.times(i, t)] += prev[i];
            }
        }
    }
    cached.clear();
    for (const auto& row : N) cached.push_back(sum_by_class(G, row));
    return cached;
}

Integer monotone_count(int d, const std::vector<int>& mu, int k, bool fixed_target) {
    if (std::accumulate(mu.begin(), mu.end(), 0) != d) throw InvalidQuery("mu does not partition d");
    if (k < 0) return 0;
    const SymmetricGroup& G = SymmetricGroup::get(d);
    const Integer total = monotone_class_totals(d, k)[static_cast<std::size_t>(k)][G.class_index(mu)];
    check_parity(sorted_desc(mu), k, 1, total, "monotone count");
    if (!fixed_target) return total;
    // Class size d!/(|Aut(mu)| prod mu_i). Monotone class sums are central,
    // so every element of the class has the same count.
    Integer z = Integer(static_cast<unsigned long>(automorphisms(mu)));
    for (int p : mu) z *= p;
    const Integer size = factorial(static_cast<unsigned long>(d)) / z;
    if (total % size != 0) throw ConsistencyFailure("monotone class total not divisible by the class size");
    return total / size;
}

OrbifoldCount orbifold_count(int d, int r, const std::vector<int>& mu, int k, Exec exec, std::uint64_t budget) {
    FactorizationQuery q;
    q.d = d;
    q.mu = mu;
    q.k = k;
    q.transitive = true;
    q.orbifold_r = r;
    const OracleResult res = count_factorizations(q, exec, budget);
    OrbifoldCount out;
    out.raw = res.count;
    out.calibration = aut_over_factorial(mu);
    out.weighted = res.weighted;
    return out;
}

Integer orbifold_count_by_convolution(int d, int r, const std::vector<int>& mu, int k) {
    if (r < 1 || d % r != 0) throw InvalidQuery("r must divide d");
    const SymmetricGroup& G = convolution_group(d);
    const std::size_t start = G.class_index(std::vector<int>(static_cast<std::size_t>(d / r), r));
    std::vector<Integer> v(G.order());
    for (std::size_t i = 0; i < G.order(); ++i)
        if (G.class_of(i) == start) v[i] = 1;
    return sum_by_class(G, convolve(G, std::move(v), k, Exec::parallel))[G.class_index(mu)];
}

}  // namespace hs
