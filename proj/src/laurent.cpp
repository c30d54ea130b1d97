#include "hs/laurent.hpp"

#include "hs/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hs {

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, Rational coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::map<int, Rational> acc;
    for (auto& [e, c] : terms) acc[e] += c;
    LaurentPoly p;
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.emplace_back(e, std::move(c));
    return p;
}

Rational LaurentPoly::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
}

void LaurentPoly::merge_into(std::vector<Term>& out, const std::vector<Term>& a,
                             const std::vector<Term>& b, bool subtract) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].second - b[j].second)
                                  : Rational(a[i].second + b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    std::vector<Term> out;
    merge_into(out, terms_, rhs.terms_, false);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    std::vector<Term> out;
    merge_into(out, terms_, rhs.terms_, true);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    LaurentPoly p;
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.emplace_back(e, std::move(c));
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += k;
    return p;
}

LaurentPoly LaurentPoly::times_qint(int k) const {
    if (k == 0 || is_zero()) return {};
    LaurentPoly p;
    merge_into(p.terms_, shifted(k).terms_, shifted(-k).terms_, true);
    return p;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
    return p;
}

bool LaurentPoly::has_integer_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.get_den() == 1; });
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (!unit) os << mag.get_str() << "*";
        os << "u";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly qint(int k) {
    if (k == 0) return {};
    if (k < 0) return -qint(-k);
    return LaurentPoly::from_terms({{k, 1}, {-k, -1}});
}

namespace {

// Dense coefficients of u^(-min) p, index = exponent - min.
std::vector<Rational> dense(const LaurentPoly& p) {
    std::vector<Rational> out(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1));
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - p.min_exponent())] = c;
    return out;
}

LaurentPoly from_dense(const std::vector<Rational>& coeffs, int offset) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) terms.emplace_back(static_cast<int>(i) + offset, coeffs[i]);
    return LaurentPoly::from_terms(std::move(terms));
}

// Polynomial remainder of a by b (both dense, b nonzero leading term).
void poly_divmod(std::vector<Rational> a, const std::vector<Rational>& b, std::vector<Rational>& q,
                 std::vector<Rational>& r) {
    const std::size_t db = b.size() - 1;
    q.assign(a.size() >= b.size() ? a.size() - db : 0, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i] == 0) continue;
        Rational f = a[i] / lead;
        q[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    a.resize(std::min(a.size(), db));
    while (!a.empty() && a.back() == 0) a.pop_back();
    r = std::move(a);
}

}  // namespace

bool try_exact_div(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& quotient) {
    if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (num.is_zero()) {
        quotient = {};
        return true;
    }
    // Single-term divisor: a unit times a constant.
    if (den.size() == 1) {
        quotient = num.shifted(-den.min_exponent());
        quotient *= Rational(1) / den.leading_coeff();
        return true;
    }
    std::vector<Rational> q, r;
    poly_divmod(dense(num), dense(den), q, r);
    if (!r.empty()) return false;
    quotient = from_dense(q, num.min_exponent() - den.min_exponent());
    return true;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    LaurentPoly q;
    if (!try_exact_div(num, den, q))
        throw NonExactDivision("(" + num.to_string() + ") / (" + den.to_string() + ")");
    return q;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    auto normalise = [](const LaurentPoly& p) {
        LaurentPoly out = p.shifted(-p.min_exponent());
        out *= Rational(1) / out.leading_coeff();
        return out;
    };
    if (a.is_zero()) return normalise(b);
    if (b.is_zero()) return normalise(a);
    std::vector<Rational> x = dense(a), y = dense(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::vector<Rational> q, r;
        poly_divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return normalise(from_dense(x, 0));
}

Rational hbar_coeff(const LaurentPoly& p, unsigned k) {
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        if (e == 0) {
            if (k == 0) sum += c;
            continue;
        }
        Rational half_e(e, 2);
        half_e.canonicalize();
        sum += c * rpow(half_e, k);
    }
    return sum / Rational(factorial(k));
}

}  // namespace hs
