#pragma once

#include "hs/laurent.hpp"
#include "hs/qint_product.hpp"
#include "hs/qrational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

/// One factor E_a(b hbar) of a vacuum correlator.
struct Op {
    int a = 0;  // subscript; the operator has degree -a
    int b = 0;  // argument multiplier, b >= 0
    friend auto operator<=>(const Op&, const Op&) = default;
};

/// An ordered product E_{a_1}(b_1 hbar) ... E_{a_m}(b_m hbar) with b_i >= 0
/// and b_i > 0 whenever a_i >= 0. Construction enforces both, so every
/// OperatorWord is a legal input to the evaluation algorithms.
class OperatorWord {
public:
    /// Throws InvalidWord.
    explicit OperatorWord(std::vector<Op> ops);

    /// E_r(r hbar)^{|mu|/r} E_{-mu_1}(0) ... E_{-mu_n}(0). r = 1 gives the
    /// word generating simple Hurwitz numbers. Throws InvalidQuery unless r
    /// divides |mu| and all parts are positive.
    static OperatorWord hurwitz(const std::vector<int>& mu, int r = 1);
    /// "1:1,1:1,-2:0". Throws ParseError (with item position) or InvalidWord.
    static OperatorWord parse(std::string_view text);

    const std::vector<Op>& ops() const noexcept { return ops_; }
    std::size_t length() const noexcept { return ops_.size(); }
    int subscript_sum() const;
    int argument_sum() const;
    int max_subscript() const;

    std::string to_string() const;  // "1:1,1:1,-2:0"

    friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;

private:
    std::vector<Op> ops_;
};

/// -sum b_j + sum_{i<j} (a_i b_j - a_j b_i): the part of the score that
/// depends only on the operator word.
long word_score(const OperatorWord& w);

/// An intermediate term [k_1]...[k_l] <word> of the evaluation.
struct TermState {
    QIntProduct scalar;
    OperatorWord word;
};

/// (sum k_i) - (sum b_j) + sum_{i<j} (a_i b_j - a_j b_i).
long score(const TermState& t);

/// A surviving term of a connected correlator: product / [divisor], or just
/// product when divisor is 0.
struct QProductTerm {
    QIntProduct product;
    int divisor = 0;
    std::string to_string() const;
};

struct CorrelatorTrace {
    long initial_score = 0;
    long max_score = 0;
    std::size_t commutations = 0;  // step (4) applications
    std::size_t killed = 0;        // terms dropped by the prefix-sum rule
    std::size_t distinct_words = 0;
};

struct CorrelatorResult {
    /// q-integer form; present when requested.
    std::optional<std::vector<QProductTerm>> qproducts;
    QRational value;
    std::optional<CorrelatorTrace> trace;

    /// The value as a Laurent polynomial; throws NonExactDivision if the
    /// value is not polynomial.
    LaurentPoly laurent() const;
    std::string qproduct_string() const;
};

struct CorrelatorOptions {
    /// Carry formal sums of q-integer products instead of expanded Laurent
    /// polynomials, so the result has a q-integer form.
    bool keep_qproducts = false;
    /// Check at every commutation step that the commutation term keeps the
    /// score and the passing term lowers it by 2t, t > 0 (ScoreViolation
    /// otherwise), and check the term shape of the connected result.
    bool trace = false;
    /// Merge terms that reach the same operator word.
    bool aggregate = true;
};

/// Vacuum expectation <word> by iterated commutation of the rightmost
/// positive-subscript operator.
QRational disconnected(const OperatorWord& word);

/// Connected correlator <word>°: the same recursion keeping only terms that
/// end in a single E_0.
CorrelatorResult connected(const OperatorWord& word, const CorrelatorOptions& options = {});

/// connected() with tracing switched on.
CorrelatorResult connected_traced(const OperatorWord& word);

/// <word> computed by first commuting the operators at positions i, i+1
/// (whatever their subscripts) and then evaluating both resulting words with
/// disconnected(). Used to check that the result does not depend on the
/// reduction order.
QRational disconnected_commuting_at(const OperatorWord& word, std::size_t i);

}  // namespace hs
