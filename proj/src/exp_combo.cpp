#include "hs/exp_combo.hpp"

#include "hs/errors.hpp"

namespace hs {

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

Rational ExpCombo::coeff(int m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
}

int ExpCombo::top() const { return terms.empty() ? 0 : terms.rbegin()->first; }

Rational ExpCombo::series_coeff(unsigned k) const {
    Rational sum = 0;
    const bool odd_k = k % 2 == 1;
    // e^(m hbar) -/+ e^(-m hbar) contributes m^k (1 -/+ (-1)^k).
    const bool doubles = (parity == Parity::odd) == odd_k;
    if (doubles)
        for (const auto& [m, c] : terms) sum += 2 * c * Rational(ipow(m, k));
    if (k == 0 && m0) sum += *m0;
    return sum;
}

ExpCombo to_exp_combo(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (e % 2 != 0) throw OddExponent("u^" + std::to_string(e) + " in " + p.to_string());
    ExpCombo out;
    const LaurentPoly mirror = p.inverted();
    if (mirror == p) {
        out.parity = Parity::even;
        out.m0 = p.coeff(0);
    } else if (mirror == -p) {
        out.parity = Parity::odd;
    } else {
        throw AsymmetricInput(p.to_string());
    }
    for (const auto& [e, c] : p.terms())
        if (e > 0) out.terms.emplace(e / 2, c);
    return out;
}

LaurentPoly to_laurent(const ExpCombo& c) {
    LaurentPoly out;
    const Rational mirror_sign = c.parity == Parity::odd ? -1 : 1;
    for (const auto& [m, v] : c.terms) {
        out += LaurentPoly::monomial(2 * m, v);
        out += LaurentPoly::monomial(-2 * m, mirror_sign * v);
    }
    if (c.m0) out += LaurentPoly(*c.m0);
    return out;
}

}  // namespace hs
