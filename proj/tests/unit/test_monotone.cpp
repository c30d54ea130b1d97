#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute_force.hpp"
#include "generators.hpp"
#include "hs/errors.hpp"
#include "hs/monotone.hpp"
#include "hs/partition.hpp"
#include "hs/permutation.hpp"
#include "hs/tables.hpp"

using namespace hs;

namespace {

Rational r(long p, long q = 1) {
    Rational x(p, q);
    x.canonicalize();
    return x;
}

long k_of(const std::vector<int>& mu, int g) {
    return std::accumulate(mu.begin(), mu.end(), 0L) + 2L * g - 2 + static_cast<long>(mu.size());
}

}  // namespace

TEST_CASE("documented values") {
    CHECK(monotone_hurwitz({3}, 0) == 2);
    for (int g = 0; g <= 10; ++g) CHECK(monotone_hurwitz({2}, g) == 1);
    CHECK(monotone_hurwitz({2, 1}, 0) == 4);
    CHECK(monotone_hurwitz({2, 1}, 0) == r(2, 3) * 8 - r(4, 3));
    CHECK(monotone_hurwitz({2, 1}, -1) == 0);
    CHECK(to_string(Normalisation::fixed_target) == "fixed-target");
    CHECK(parse_normalisation("definition") == Normalisation::definition);
    CHECK_THROWS_AS(parse_normalisation("other"), ParseError);
}

TEST_CASE("agreement with the plain enumerator") {
    for (int d = 1; d <= 4; ++d)
        for (const Partition& p : partitions_of(d)) {
            const std::vector<int> mu = p.parts();
            for (int g = 0; k_of(mu, g) <= 6; ++g) {
                const int k = static_cast<int>(k_of(mu, g));
                const brute::Tally t = brute::enumerate(d, k, true);
                const long fixed = brute::lookup(t.by_perm_transitive, Permutation::with_cycle_type(mu).images());
                const Rational def = Rational(Integer(static_cast<unsigned long>(automorphisms(mu)))) /
                                     Rational(factorial(static_cast<unsigned long>(d))) *
                                     brute::lookup(t.by_type_transitive, mu);
                CHECK_MESSAGE(monotone_hurwitz(mu, g) == fixed, p.to_string() << " g=" << g);
                CHECK(monotone_hurwitz(mu, g, Normalisation::definition) == def);
                CHECK(monotone_hurwitz_exhaustive(mu, g) == fixed);
            }
        }
}

TEST_CASE("normalisation bridge") {
    gen::Source src(31);
    for (int i = 0; i < 40; ++i) {
        const std::vector<int> mu = src.profile(1, 6);
        const int g = src.integer(0, 6);
        Integer prod = 1;
        for (int x : mu) prod *= x;
        CHECK(monotone_hurwitz(mu, g) == Rational(prod) * monotone_hurwitz(mu, g, Normalisation::definition));
    }
}

TEST_CASE("fitting the exponential-plus-linear model") {
    {
        std::vector<std::pair<long, Rational>> v;
        for (int g = 0; g <= 2; ++g) v.emplace_back(k_of({3}, g), monotone_hurwitz({3}, g));
        const MonotoneModel m = fit_exp_linear(v, 3);
        CHECK(m.C.at(2) == r(2, 3));
        CHECK(m.C.at(1) == r(-2, 3));
        CHECK(m.C0 == 0);
    }
    {
        std::vector<std::pair<long, Rational>> v;
        for (int g = 0; g <= 3; ++g) v.emplace_back(k_of({2, 2}, g), monotone_hurwitz({2, 2}, g));
        const MonotoneModel m = fit_exp_linear(v, 4);
        CHECK(m.C.at(3) == r(3, 8));
        CHECK(m.C.at(2) == r(-2, 3));
        CHECK(m.C.at(1) == r(7, 24));
        CHECK(m.C0 == r(-1, 2));
    }
    {
        const MonotoneModel m = fit_exp_linear({{0, 1}, {5, 1}}, 2);
        CHECK(m.C.at(1) == 1);
        CHECK(m.C0 == 0);
    }
    // Recovers random models exactly from d points.
    gen::Source src(32);
    for (int i = 0; i < 30; ++i) {
        const int d = src.integer(2, 6);
        MonotoneModel truth;
        truth.C0 = src.rational();
        for (int m = 1; m < d; ++m) truth.C[m] = src.rational();
        std::vector<std::pair<long, Rational>> v;
        for (int j = 0; j < d; ++j) {
            const long k = 2L * j + src.integer(0, 1);
            v.emplace_back(k, truth(k));
        }
        const MonotoneModel fit = fit_exp_linear(v, d);
        CHECK(fit.C0 == truth.C0);
        CHECK(fit.C == truth.C);
    }
    CHECK_THROWS_AS(fit_exp_linear({{1, 1}, {1, 2}}, 2), SingularSystem);
    CHECK_THROWS_AS(fit_exp_linear({{1, 1}}, 2), InvalidQuery);
    CHECK_THROWS_AS(fit_exp_linear({{1, 1}}, 1), InvalidQuery);
}

TEST_CASE("verification reports") {
    const MonotoneReport a = verify_conjecture({2, 1, 1, 1}, 10);
    CHECK(a.all_pass);
    CHECK(a.bridge_holds);
    CHECK(a.model.C.at(4) == r(8, 45));
    CHECK(a.model.C.at(3) == r(-9, 10));
    CHECK(a.model.C.at(2) == r(32, 45));
    CHECK(a.model.C.at(1) == r(-83, 30));
    CHECK(a.model.C0 == r(10, 3));
    CHECK(a.points.size() == 11);
    CHECK(a.points[4].fitted);
    CHECK_FALSE(a.points[5].fitted);

    const MonotoneReport five = verify_conjecture({5}, 10);
    CHECK(five.all_pass);
    CHECK(five.model.C0 == 0);
    int nonzero = 0;
    for (const auto& [m, c] : five.model.C) nonzero += c != 0;
    CHECK(nonzero == 4);

    const MonotoneReport ones = verify_conjecture({1, 1}, 20);
    CHECK(ones.all_pass);
    CHECK(ones.model.C.at(1) == 1);
    CHECK(ones.model.C0 == 0);

    const MonotoneReport def = verify_conjecture({2, 2}, 8, Normalisation::definition);
    CHECK(def.all_pass);
    CHECK(def.model.C.at(3) * 4 == r(3, 8));

    CHECK_THROWS_AS(verify_conjecture({3, 2}, 3), InvalidQuery);
    CHECK_THROWS_AS(verify_conjecture({1}, 5), InvalidQuery);
}

TEST_CASE("reference monotone table") {
    const TableReport rep = reproduce_table(3);
    CHECK(rep.rows.size() == 17);
    for (const auto& row : rep.rows) CHECK_MESSAGE(row.match, mu_to_string(row.mu) << ": " << row.computed);
}
