#include "hs/qint_product.hpp"

#include "hs/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace hs {

QIntProduct::QIntProduct(std::vector<int> f, Integer c) : factors(std::move(f)), coeff(std::move(c)) {
    for (int k : factors)
        if (k <= 0) throw std::invalid_argument("QIntProduct: factors must be positive");
    std::sort(factors.begin(), factors.end(), std::greater<>());
}

int QIntProduct::factor_sum() const { return std::accumulate(factors.begin(), factors.end(), 0); }

void QIntProduct::multiply_qint(int k) {
    if (k <= 0) throw std::invalid_argument("QIntProduct: factors must be positive");
    factors.insert(std::upper_bound(factors.begin(), factors.end(), k, std::greater<>()), k);
}

std::string QIntProduct::to_string() const {
    std::ostringstream os;
    if (factors.empty()) return coeff.get_str();
    if (coeff == -1) os << "-";
    else if (coeff != 1) os << coeff.get_str();
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        os << "[" << factors[i] << "]";
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

LaurentPoly expand(const QIntProduct& p) {
    LaurentPoly out{Rational(p.coeff)};
    for (int k : p.factors) out = out.times_qint(k);
    return out;
}

QIntSum QIntSum::one() {
    QIntSum s;
    s.terms_.emplace(std::vector<int>{}, Integer(1));
    return s;
}

QIntSum QIntSum::times_qint(int k) const {
    if (k <= 0) throw std::invalid_argument("QIntSum: factors must be positive");
    QIntSum out;
    for (const auto& [f, c] : terms_) {
        std::vector<int> g = f;
        g.insert(std::upper_bound(g.begin(), g.end(), k, std::greater<>()), k);
        out.terms_.emplace(std::move(g), c);
    }
    return out;
}

QIntSum& QIntSum::operator+=(const QIntSum& rhs) {
    for (const auto& [f, c] : rhs.terms_) add(QIntProduct(f, c));
    return *this;
}

void QIntSum::add(const QIntProduct& p) {
    if (p.coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(p.factors, p.coeff);
    if (!inserted) {
        it->second += p.coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<QIntProduct> QIntSum::products() const {
    std::vector<QIntProduct> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.emplace_back(it->first, it->second);
    return out;
}

LaurentPoly QIntSum::expand() const { return hs::expand(products()); }

std::string QIntSum::to_string() const { return hs::to_string(products()); }

LaurentPoly expand(const std::vector<QIntProduct>& sum) {
    LaurentPoly out;
    for (const auto& p : sum) out += expand(p);
    return out;
}

std::string to_string(const std::vector<QIntProduct>& sum) {
    if (sum.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < sum.size(); ++i) {
        std::string t = sum[i].to_string();
        if (i == 0) {
            out = t;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

namespace {

class QProductParser {
public:
    explicit QProductParser(std::string_view s) : s_(s) {}

    std::vector<QIntProduct> parse() {
        std::vector<QIntProduct> out;
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        for (;;) {
            out.push_back(term(sign));
            skip();
            if (pos_ == s_.size()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        return out;
    }

private:
    char peek() const { return s_[pos_]; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("q-product expression, column " + std::to_string(pos_ + 1) + ": " + why);
    }
    long number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    QIntProduct term(int sign) {
        skip();
        Integer coeff = 1;
        bool seen = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            coeff = Integer(std::string(s_.substr(start, pos_ - start)), 10);
            seen = true;
            skip();
            if (pos_ < s_.size() && peek() == '*') ++pos_;
        }
        std::vector<int> factors;
        for (;;) {
            skip();
            if (pos_ == s_.size() || peek() != '[') break;
            ++pos_;
            long k = number();
            skip();
            if (pos_ == s_.size() || peek() != ']') fail("expected ']'");
            ++pos_;
            long mult = 1;
            skip();
            if (pos_ < s_.size() && peek() == '^') {
                ++pos_;
                mult = number();
            }
            if (k <= 0) fail("q-integer argument must be positive");
            for (long i = 0; i < mult; ++i) factors.push_back(static_cast<int>(k));
            seen = true;
            skip();
            if (pos_ < s_.size() && peek() == '*') ++pos_;
        }
        if (!seen) fail("expected a coefficient or a q-integer");
        return QIntProduct(std::move(factors), sign * coeff);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<QIntProduct> parse_qproduct_sum(std::string_view text) { return QProductParser(text).parse(); }

}  // namespace hs
