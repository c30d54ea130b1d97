#include "hs/correlator.hpp"

#include "hs/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace hs {

OperatorWord::OperatorWord(std::vector<Op> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw InvalidWord("empty operator word");
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op& op = ops_[i];
        if (op.b < 0) throw InvalidWord("negative argument at position " + std::to_string(i + 1));
        if (op.a >= 0 && op.b == 0)
            throw InvalidWord("E_" + std::to_string(op.a) + "(0) at position " + std::to_string(i + 1) +
                              " (operators with non-negative subscript need b > 0)");
    }
}

OperatorWord OperatorWord::hurwitz(const std::vector<int>& mu, int r) {
    if (mu.empty()) throw InvalidQuery("empty profile");
    if (r < 1) throw InvalidQuery("r must be positive");
    int d = 0;
    for (int p : mu) {
        if (p <= 0) throw InvalidQuery("profile parts must be positive");
        d += p;
    }
    if (d % r != 0) throw InvalidQuery("r = " + std::to_string(r) + " does not divide |mu| = " + std::to_string(d));
    std::vector<Op> ops(static_cast<std::size_t>(d / r), Op{r, r});
    for (int p : mu) ops.push_back(Op{-p, 0});
    return OperatorWord(std::move(ops));
}

OperatorWord OperatorWord::parse(std::string_view text) {
    std::vector<Op> ops;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    int index = 0;
    while (std::getline(ss, item, ',')) {
        ++index;
        const auto colon = item.find(':');
        auto fail = [&] {
            return ParseError("operator word item " + std::to_string(index) + " '" + item + "': expected a:b");
        };
        if (colon == std::string::npos) throw fail();
        try {
            std::size_t ua = 0, ub = 0;
            const std::string sa = item.substr(0, colon), sb = item.substr(colon + 1);
            const int a = std::stoi(sa, &ua);
            const int b = std::stoi(sb, &ub);
            if (ua != sa.size() || ub != sb.size()) throw fail();
            ops.push_back(Op{a, b});
        } catch (const std::logic_error&) {
            throw fail();
        }
    }
    return OperatorWord(std::move(ops));
}

int OperatorWord::subscript_sum() const {
    return std::accumulate(ops_.begin(), ops_.end(), 0, [](int s, const Op& o) { return s + o.a; });
}

int OperatorWord::argument_sum() const {
    return std::accumulate(ops_.begin(), ops_.end(), 0, [](int s, const Op& o) { return s + o.b; });
}

int OperatorWord::max_subscript() const {
    return std::max_element(ops_.begin(), ops_.end(), [](const Op& x, const Op& y) { return x.a < y.a; })->a;
}

std::string OperatorWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < ops_.size(); ++i)
        out += (i ? "," : "") + std::to_string(ops_[i].a) + ":" + std::to_string(ops_[i].b);
    return out;
}

long word_score(const OperatorWord& w) {
    long a_before = 0, b_before = 0, s = 0;
    for (const Op& op : w.ops()) {
        s += static_cast<long>(op.b) * a_before - static_cast<long>(op.a) * b_before;
        a_before += op.a;
        b_before += op.b;
    }
    return s - b_before;
}

long score(const TermState& t) { return t.scalar.factor_sum() + word_score(t.word); }

std::string QProductTerm::to_string() const {
    std::string s = product.to_string();
    if (divisor != 0) s += "/[" + std::to_string(divisor) + "]";
    return s;
}

LaurentPoly CorrelatorResult::laurent() const {
    auto p = value.to_laurent();
    if (!p) throw NonExactDivision("correlator value " + value.to_string() + " is not a Laurent polynomial");
    return *p;
}

std::string CorrelatorResult::qproduct_string() const {
    if (!qproducts) return value.to_string();
    if (qproducts->empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < qproducts->size(); ++i) {
        std::string t = (*qproducts)[i].to_string();
        if (i == 0) out = t;
        else if (t[0] == '-') out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out;
}

namespace {

std::vector<Op> without(const std::vector<Op>& ops, std::size_t i) {
    std::vector<Op> out = ops;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

// Operators with positive subscript standing left of a non-positive one.
std::size_t inversions(const std::vector<Op>& ops) {
    std::size_t positives = 0, inv = 0;
    for (const Op& op : ops) {
        if (op.a > 0) ++positives;
        else inv += positives;
    }
    return inv;
}

LaurentPoly unit_scalar(LaurentPoly*) { return LaurentPoly(1); }
QIntSum unit_scalar(QIntSum*) { return QIntSum::one(); }
LaurentPoly expand_scalar(const LaurentPoly& s) { return s; }
LaurentPoly expand_scalar(const QIntSum& s) { return s.expand(); }

// Work queue evaluating the commutation recursion. Terms are bucketed by
// (word length, inversions), both of which strictly decrease along the
// recursion: the commutation term is one operator shorter and the passing
// term has one inversion fewer. Processing buckets in decreasing order
// therefore sees every contribution to a word before the word is expanded,
// so terms reaching the same word can be merged.
template <class Scalar>
class Engine {
public:
    Engine(bool connected, const CorrelatorOptions& options) : connected_(connected), options_(options) {}

    void run(const OperatorWord& word) {
        trace_.initial_score = word_score(word);
        trace_.max_score = trace_.initial_score;
        push(word.ops(), unit_scalar(static_cast<Scalar*>(nullptr)), 0);
        while (!buckets_.empty()) {
            auto node = buckets_.extract(buckets_.begin());
            for (auto& [key, entry] : node.mapped()) step(key.first, entry);
        }
    }

    const CorrelatorTrace& trace() const { return trace_; }
    bool has_connected_terminal() const { return terminal_b_ != 0; }
    int terminal_b() const { return terminal_b_; }
    const Scalar& connected_terminal() const { return connected_terminal_; }
    const std::map<std::vector<int>, Scalar>& disconnected_terminals() const { return disconnected_terminals_; }

private:
    struct Entry {
        Scalar scalar;
        long max_k = 0;  // largest bracket sum among merged contributions
    };
    using Key = std::pair<std::vector<Op>, std::uint64_t>;
    using Bucket = std::map<Key, Entry>;

    bool killed_by_prefix(const std::vector<Op>& ops) const {
        long prefix = 0;
        for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
            prefix += ops[i].a;
            if (connected_ ? prefix <= 0 : prefix < 0) return true;
        }
        return false;
    }

    void push(std::vector<Op> ops, Scalar scalar, long max_k) {
        if (scalar.is_zero()) return;
        if (killed_by_prefix(ops)) {
            ++trace_.killed;
            return;
        }
        const auto bucket_key = std::make_pair(ops.size(), inversions(ops));
        Bucket& bucket = buckets_[bucket_key];
        Key key{std::move(ops), options_.aggregate ? 0 : serial_++};
        auto it = bucket.find(key);
        if (it == bucket.end()) {
            bucket.emplace(std::move(key), Entry{std::move(scalar), max_k});
            ++trace_.distinct_words;
        } else {
            it->second.scalar += scalar;
            it->second.max_k = std::max(it->second.max_k, max_k);
        }
    }

    void step(const std::vector<Op>& ops, Entry& entry) {
        if (entry.scalar.is_zero()) return;
        const bool all_zero = std::all_of(ops.begin(), ops.end(), [](const Op& o) { return o.a == 0; });
        if (all_zero) {
            terminal(ops, entry);
            return;
        }
        std::size_t i = ops.size();
        while (i-- > 0)
            if (ops[i].a > 0) break;
        // A positive last operator leaves a negative prefix, which push()
        // has already discarded.
        if (i + 1 >= ops.size()) throw ScoreViolation("rightmost positive operator has no right neighbour");
        const Op& left = ops[i];
        const Op& right = ops[i + 1];
        const long t = static_cast<long>(left.a) * right.b - static_cast<long>(right.a) * left.b;
        if (t <= 0) throw ScoreViolation("commutation bracket [" + std::to_string(t) + "] is not positive");
        ++trace_.commutations;

        std::vector<Op> passing = ops;
        std::swap(passing[i], passing[i + 1]);
        std::vector<Op> commuted = without(ops, i + 1);
        commuted[i] = Op{left.a + right.a, left.b + right.b};

        if (options_.trace) {
            const long parent = word_score(OperatorWord(ops));
            const long pass_score = word_score(OperatorWord(passing));
            const long comm_score = word_score(OperatorWord(commuted)) + t;
            if (comm_score != parent)
                throw ScoreViolation("commutation term changed the score from " + std::to_string(parent) + " to " +
                                     std::to_string(comm_score));
            if (pass_score != parent - 2 * t)
                throw ScoreViolation("passing term score " + std::to_string(pass_score) + " is not " +
                                     std::to_string(parent) + " - 2*" + std::to_string(t));
            trace_.max_score = std::max(trace_.max_score, entry.max_k + parent);
        }

        Scalar commuted_scalar = entry.scalar.times_qint(static_cast<int>(t));
        push(std::move(passing), std::move(entry.scalar), entry.max_k);
        push(std::move(commuted), std::move(commuted_scalar), entry.max_k + t);
    }

    void terminal(const std::vector<Op>& ops, Entry& entry) {
        if (options_.trace) {
            const long s = entry.max_k + word_score(OperatorWord(ops));
            trace_.max_score = std::max(trace_.max_score, s);
        }
        if (connected_) {
            if (ops.size() != 1) return;  // unreachable: prefix rule kills these
            if (terminal_b_ != 0 && terminal_b_ != ops[0].b)
                throw ScoreViolation("argument sum changed during evaluation");
            terminal_b_ = ops[0].b;
            connected_terminal_ += entry.scalar;
            return;
        }
        std::vector<int> bs;
        for (const Op& o : ops) bs.push_back(o.b);
        std::sort(bs.begin(), bs.end());
        disconnected_terminals_[bs] += entry.scalar;
    }

    bool connected_;
    CorrelatorOptions options_;
    std::map<std::pair<std::size_t, std::size_t>, Bucket, std::greater<>> buckets_;
    std::uint64_t serial_ = 0;
    CorrelatorTrace trace_;
    int terminal_b_ = 0;
    Scalar connected_terminal_;
    std::map<std::vector<int>, Scalar> disconnected_terminals_;
};

template <class Scalar>
CorrelatorResult run_connected(const OperatorWord& word, const CorrelatorOptions& options) {
    CorrelatorResult result;
    Engine<Scalar> engine(true, options);
    if (word.subscript_sum() == 0) engine.run(word);
    if (options.trace) result.trace = engine.trace();

    if (!engine.has_connected_terminal()) {
        result.value = QRational();
        if (options.keep_qproducts) result.qproducts.emplace();
        return result;
    }
    const int B = engine.terminal_b();
    const LaurentPoly numerator = expand_scalar(engine.connected_terminal());
    if (word.length() == 1) {
        result.value = QRational(numerator, qint(B));
    } else {
        result.value = QRational(exact_div(numerator, qint(B)));
    }

    if constexpr (std::is_same_v<Scalar, QIntSum>) {
        std::vector<QProductTerm> terms;
        QIntSum cancelled;
        std::vector<QProductTerm> divided;
        for (QIntProduct p : engine.connected_terminal().products()) {
            auto it = std::find(p.factors.begin(), p.factors.end(), B);
            if (it != p.factors.end()) {
                p.factors.erase(it);
                cancelled.add(p);
            } else {
                divided.push_back(QProductTerm{std::move(p), B});
            }
        }
        for (auto& p : cancelled.products()) terms.push_back(QProductTerm{std::move(p), 0});
        for (auto& t : divided) terms.push_back(std::move(t));
        if (options.keep_qproducts) result.qproducts = std::move(terms);

        if (options.trace && word.length() >= 2) {
            // Every term is [k_1]...[k_{m-2}] [a B] / [B] with 0 < a <= max subscript.
            const int a_max = word.max_subscript();
            for (const QIntProduct& p : engine.connected_terminal().products()) {
                const bool length_ok = p.length() == word.length() - 1;
                const bool has_pair = std::any_of(p.factors.begin(), p.factors.end(),
                                                  [&](int f) { return f % B == 0 && f / B >= 1 && f / B <= a_max; });
                if (!length_ok || !has_pair)
                    throw ConsistencyFailure("term " + p.to_string() + " of <" + word.to_string() +
                                             ">° does not have the expected shape");
                const long s = p.factor_sum() - B;
                if (s > result.trace->initial_score || (result.trace->initial_score - s) % 2 != 0)
                    throw ScoreViolation("final term " + p.to_string() + " has score " + std::to_string(s));
            }
        }
    }
    return result;
}

}  // namespace

QRational disconnected(const OperatorWord& word) {
    if (word.subscript_sum() != 0) return QRational();
    Engine<LaurentPoly> engine(false, CorrelatorOptions{});
    engine.run(word);
    const auto& groups = engine.disconnected_terminals();
    if (groups.empty()) return QRational();
    // Common denominator: prod_b [b]^(max multiplicity of b over groups).
    std::map<int, int> mult;
    for (const auto& [bs, s] : groups) {
        std::map<int, int> m;
        for (int b : bs) ++m[b];
        for (auto [b, c] : m) mult[b] = std::max(mult[b], c);
    }
    LaurentPoly den(1);
    for (auto [b, c] : mult)
        for (int i = 0; i < c; ++i) den = den.times_qint(b);
    LaurentPoly num;
    for (const auto& [bs, s] : groups) {
        std::map<int, int> m;
        for (int b : bs) ++m[b];
        LaurentPoly term = s;
        for (auto [b, c] : mult)
            for (int i = m[b]; i < c; ++i) term = term.times_qint(b);
        num += term;
    }
    return QRational(num, den);
}

CorrelatorResult connected(const OperatorWord& word, const CorrelatorOptions& options) {
    if (options.keep_qproducts || options.trace) return run_connected<QIntSum>(word, options);
    return run_connected<LaurentPoly>(word, options);
}

CorrelatorResult connected_traced(const OperatorWord& word) {
    CorrelatorOptions options;
    options.keep_qproducts = true;
    options.trace = true;
    return connected(word, options);
}

QRational disconnected_commuting_at(const OperatorWord& word, std::size_t i) {
    const auto& ops = word.ops();
    if (i + 1 >= ops.size()) throw std::out_of_range("disconnected_commuting_at: position out of range");
    std::vector<Op> passing = ops;
    std::swap(passing[i], passing[i + 1]);
    const int t = ops[i].a * ops[i + 1].b - ops[i + 1].a * ops[i].b;
    std::vector<Op> commuted = without(ops, i + 1);
    commuted[i] = Op{ops[i].a + ops[i + 1].a, ops[i].b + ops[i + 1].b};
    QRational value = disconnected(OperatorWord(std::move(passing)));
    if (t != 0) value += QRational(qint(t)) * disconnected(OperatorWord(std::move(commuted)));
    return value;
}

}  // namespace hs
