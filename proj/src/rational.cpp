#include "hs/rational.hpp"

#include "hs/errors.hpp"

#include <cctype>
#include <string>

namespace hs {

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ParseError("not a rational number: '" + s + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    Rational r;
    r.get_num() = Integer(num, 10);
    r.get_den() = Integer(den, 10);
    if (r.get_den() == 0) throw bad();
    r.canonicalize();
    return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational rpow(const Rational& base, unsigned long exponent) {
    Rational out;
    out.get_num() = ipow(base.get_num(), exponent);
    out.get_den() = ipow(base.get_den(), exponent);
    out.canonicalize();
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

namespace {

// round(|num| / den) half away from zero, for den > 0.
Integer round_div(const Integer& num, const Integer& den) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    return q;
}

}  // namespace

std::string to_fixed(const Rational& x, int digits) {
    const Integer scale = ipow(10, static_cast<unsigned long>(digits));
    Integer n = round_div(abs(x.get_num()) * scale, x.get_den());
    std::string s = n.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (x < 0 && n != 0) s.insert(0, "-");
    return s;
}

std::string to_significant(const Rational& x, int sig, Rounding mode) {
    if (x == 0) return "0";
    const Rational a = abs(x);
    // Find e with 10^e <= a < 10^(e+1).
    int e = static_cast<int>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
            static_cast<int>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
    auto pow10 = [](int k) {
        Rational p = 1;
        if (k >= 0) p = Rational(ipow(10, k));
        else p = Rational(Integer(1), ipow(10, -k));
        return p;
    };
    while (a < pow10(e)) --e;
    while (a >= pow10(e + 1)) ++e;
    // N = round(a / 10^(e - sig + 1)), an integer with sig digits (or 10^sig).
    Rational scaled = a / pow10(e - sig + 1);
    Integer n = mode == Rounding::toward_zero ? Integer(scaled.get_num() / scaled.get_den())
                                              : round_div(scaled.get_num(), scaled.get_den());
    if (n == ipow(10, sig)) {
        n /= 10;
        ++e;
    }
    std::string digits = n.get_str();
    std::string out = x < 0 ? "-" : "";
    if (e >= -4 && e < sig) {
        if (e >= 0) {
            std::string ip = digits.substr(0, e + 1);
            std::string fp = digits.substr(e + 1);
            out += ip;
            if (!fp.empty()) out += "." + fp;
        } else {
            out += "0." + std::string(-e - 1, '0') + digits;
        }
    } else {
        out += digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(e);
    }
    return out;
}

}  // namespace hs
