#pragma once

#include "hs/laurent.hpp"
#include "hs/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace hs {

enum class Parity { odd, even };

std::string to_string(Parity p);

/// A combination of exponentials in the basis e^(m hbar) - e^(-m hbar)
/// (odd parity) or e^(m hbar) + e^(-m hbar) (even parity), m >= 1. In the
/// even case the constant term is kept separately in m0. The optional linear
/// coefficient is used only by the monotone exponential-plus-linear model.
struct ExpCombo {
    Parity parity = Parity::odd;
    std::map<int, Rational> terms;  // m -> C(m), no zero entries
    std::optional<Rational> m0;
    std::optional<Rational> linear;

    Rational coeff(int m) const;
    /// Largest m carrying a nonzero coefficient, 0 if none.
    int top() const;
    /// sum_m C(m) (m^k -/+ (-m)^k) + [k = 0] m0: the hbar^k/k! coefficient
    /// of the represented series.
    Rational series_coeff(unsigned k) const;

    friend bool operator==(const ExpCombo&, const ExpCombo&) = default;
};

/// Reads off the exponential combination of a Laurent polynomial that is
/// symmetric or antisymmetric under u -> 1/u and has only even exponents.
/// Throws OddExponent or AsymmetricInput.
ExpCombo to_exp_combo(const LaurentPoly& p);

/// Inverse of to_exp_combo.
LaurentPoly to_laurent(const ExpCombo& c);

}  // namespace hs
