#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "hs/correlator.hpp"
#include "hs/errors.hpp"
#include "hs/set_partitions.hpp"
#include "hs/tables.hpp"
#include "hs/wedge.hpp"

#include <map>
#include <numeric>

using namespace hs;

namespace {

// <ops> by applying each operator to the vacuum vector, right to left.
QRational vacuum_expectation(const std::vector<Op>& ops) {
    wedge::WedgeVector v = wedge::WedgeVector::basis(Partition());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = wedge::apply_E(it->a, it->b, v);
    return v.coeff(Partition());
}

// Connected part by Moebius inversion over set partitions of the positions,
// each block keeping the original order.
class WedgeConnected {
public:
    explicit WedgeConnected(std::vector<Op> ops) : ops_(std::move(ops)) {}

    QRational connected(unsigned mask) {
        if (auto it = conn_.find(mask); it != conn_.end()) return it->second;
        std::vector<int> pos;
        for (int i = 0; i < static_cast<int>(ops_.size()); ++i)
            if (mask >> i & 1U) pos.push_back(i);
        QRational value = disconnected(mask);
        for_each_set_partition(static_cast<int>(pos.size()), [&](const std::vector<std::vector<int>>& blocks) {
            if (blocks.size() == 1) return;
            QRational term(LaurentPoly(1));
            for (const auto& b : blocks) {
                unsigned sub = 0;
                for (int j : b) sub |= 1U << pos[static_cast<std::size_t>(j)];
                term *= connected(sub);
            }
            value -= term;
        });
        return conn_[mask] = value;
    }

private:
    QRational disconnected(unsigned mask) {
        std::vector<Op> sub;
        for (int i = 0; i < static_cast<int>(ops_.size()); ++i)
            if (mask >> i & 1U) sub.push_back(ops_[static_cast<std::size_t>(i)]);
        return vacuum_expectation(sub);
    }

    std::vector<Op> ops_;
    std::map<unsigned, QRational> conn_;
};

QRational wedge_connected(const OperatorWord& w) {
    WedgeConnected c(w.ops());
    return c.connected((1U << w.length()) - 1);
}

std::vector<std::vector<int>> small_profiles(int lo, int hi) {
    std::vector<std::vector<int>> out;
    for (int d = lo; d <= hi; ++d)
        for (const Partition& p : partitions_of(d)) out.push_back(p.parts());
    return out;
}

}  // namespace

TEST_CASE("documented examples") {
    CorrelatorOptions q;
    q.keep_qproducts = true;
    CHECK(connected(OperatorWord::hurwitz({2, 2}), q).qproduct_string() == "[6][2]^3 + 3[2]^4");
    CHECK(connected(OperatorWord::parse("1:1,1:1,-2:1"), q).qproduct_string() == "[3]");
    CHECK(connected(OperatorWord::hurwitz({5}), q).qproduct_string() == "[5]^4");
}

TEST_CASE("the three-point example agrees with the wedge evaluation") {
    const OperatorWord w = OperatorWord::parse("1:1,1:1,-2:1");
    CHECK(vacuum_expectation(w.ops()) == QRational(qint(3)));
    CHECK(wedge_connected(w) == QRational(qint(3)));
    CHECK(disconnected(w) == QRational(qint(3)));
}

TEST_CASE("word parsing and validation") {
    const OperatorWord w = OperatorWord::parse("1:1, 1:1,-2:0");
    CHECK(w.to_string() == "1:1,1:1,-2:0");
    CHECK(OperatorWord::parse(w.to_string()) == w);
    CHECK(w.subscript_sum() == 0);
    CHECK(w.argument_sum() == 2);
    CHECK(OperatorWord::hurwitz({2, 1}).to_string() == "1:1,1:1,1:1,-2:0,-1:0");
    CHECK(OperatorWord::hurwitz({2}, 2).to_string() == "2:2,-2:0");
    try {
        OperatorWord::parse("1:1,x:1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("item 2") != std::string::npos);
    }
    CHECK_THROWS_AS(OperatorWord::parse("1:1,2"), ParseError);
    CHECK_THROWS_AS(OperatorWord::parse("0:0"), InvalidWord);
    CHECK_THROWS_AS(OperatorWord::parse("1:0"), InvalidWord);
    CHECK_THROWS_AS(OperatorWord::parse("-1:-1"), InvalidWord);
    CHECK_THROWS_AS(OperatorWord::hurwitz({3}, 2), InvalidQuery);
    CHECK_THROWS_AS(OperatorWord::hurwitz({2, 0}), InvalidQuery);
}

TEST_CASE("word score") {
    // -sum b + sum_{i<j} (a_i b_j - a_j b_i) for 1:1,1:1,-2:1 is -3 + 0 + 3 + 3.
    CHECK(word_score(OperatorWord::parse("1:1,1:1,-2:1")) == 3);
    for (const auto& mu : small_profiles(2, 5)) {
        const long d = std::accumulate(mu.begin(), mu.end(), 0L);
        CHECK(word_score(OperatorWord::hurwitz(mu)) == d * (d - 1));
    }
}

TEST_CASE("disconnected correlators agree with the wedge evaluation") {
    gen::Source src(21);
    for (int i = 0; i < 150; ++i) {
        const OperatorWord w = src.balanced_word(4, 3, 2);
        CHECK_MESSAGE(disconnected(w) == vacuum_expectation(w.ops()), w.to_string());
    }
    for (const auto& mu : small_profiles(1, 4)) {
        const OperatorWord w = OperatorWord::hurwitz(mu);
        CHECK(disconnected(w) == vacuum_expectation(w.ops()));
    }
}

TEST_CASE("connected correlators agree with Moebius inversion of wedge values") {
    for (const auto& mu : small_profiles(1, 4)) {
        const OperatorWord w = OperatorWord::hurwitz(mu);
        CHECK_MESSAGE(connected(w).value == wedge_connected(w), w.to_string());
    }
    for (const auto& mu : std::vector<std::vector<int>>{{2}, {1, 1}, {4}, {3, 1}, {2, 2}, {2, 1, 1}}) {
        const OperatorWord w = OperatorWord::hurwitz(mu, 2);
        CHECK_MESSAGE(connected(w).value == wedge_connected(w), w.to_string());
    }
    gen::Source src(22);
    for (int i = 0; i < 60; ++i) {
        const OperatorWord w = src.balanced_word(4, 2, 2);
        CHECK_MESSAGE(connected(w).value == wedge_connected(w), w.to_string());
    }
}

TEST_CASE("aggregation and the q-integer form do not change the value") {
    gen::Source src(23);
    std::vector<OperatorWord> words;
    for (const auto& mu : small_profiles(2, 5)) words.push_back(OperatorWord::hurwitz(mu));
    for (int i = 0; i < 40; ++i) words.push_back(src.balanced_word(5, 3, 2));
    for (const auto& w : words) {
        CorrelatorOptions plain;
        plain.aggregate = false;
        CorrelatorOptions qform;
        qform.keep_qproducts = true;
        const QRational v = connected(w).value;
        CHECK(connected(w, plain).value == v);
        const CorrelatorResult q = connected(w, qform);
        CHECK(q.value == v);
        if (v.is_laurent() && q.qproducts) {
            LaurentPoly sum;
            bool divisor = false;
            for (const auto& t : *q.qproducts) {
                sum += expand(t.product);
                divisor = divisor || t.divisor != 0;
            }
            if (!divisor) CHECK(sum == q.laurent());
        }
    }
}

TEST_CASE("the order of the E_{-mu_i}(0) factors is irrelevant") {
    gen::Source src(24);
    for (int i = 0; i < 40; ++i) {
        std::vector<int> mu = src.profile(2, 6);
        const LaurentPoly base = connected(OperatorWord::hurwitz(mu)).laurent();
        src.shuffle(mu);
        CHECK(connected(OperatorWord::hurwitz(mu)).laurent() == base);
    }
}

TEST_CASE("the reduction order is irrelevant") {
    gen::Source src(25);
    for (int i = 0; i < 60; ++i) {
        const OperatorWord w = src.balanced_word(4, 3, 2);
        const QRational v = disconnected(w);
        for (std::size_t j = 0; j + 1 < w.length(); ++j) {
            // commuting two zero-argument operators would need E_0(0)
            const Op& x = w.ops()[j];
            const Op& y = w.ops()[j + 1];
            if (x.b == 0 && y.b == 0 && x.a + y.a == 0) continue;
            CHECK_MESSAGE(disconnected_commuting_at(w, j) == v, w.to_string() << " at " << j);
        }
    }
}

TEST_CASE("score bound on every table word") {
    for (const auto& mu : small_profiles(2, 5)) {
        const long d = std::accumulate(mu.begin(), mu.end(), 0L);
        const CorrelatorResult r = connected_traced(OperatorWord::hurwitz(mu));
        REQUIRE(r.trace);
        CHECK(r.trace->initial_score == d * (d - 1));
        CHECK(r.trace->max_score == d * (d - 1));
        CHECK(r.value == connected(OperatorWord::hurwitz(mu)).value);
    }
}

TEST_CASE("reference correlator table") {
    const TableReport rep = reproduce_table(1);
    CHECK(rep.rows.size() == 17);
    for (const auto& row : rep.rows) CHECK_MESSAGE(row.match, mu_to_string(row.mu) << ": " << row.computed);
}
