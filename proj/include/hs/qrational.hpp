#pragma once

#include "hs/laurent.hpp"

#include <optional>
#include <string>

namespace hs {

/// A quotient of Laurent polynomials in u, always held in normal form:
/// num and den coprime, den with lowest exponent 0 and leading coefficient 1.
/// Normal form makes == structural.
class QRational {
public:
    QRational() : den_(1) {}
    QRational(LaurentPoly value);  // NOLINT(google-explicit-constructor)
    QRational(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    /// True when the value lies in Q[u, 1/u].
    bool is_laurent() const { return den_.size() == 1; }
    /// The value as a Laurent polynomial when den divides num.
    std::optional<LaurentPoly> to_laurent() const;

    QRational& operator+=(const QRational& rhs);
    QRational& operator-=(const QRational& rhs);
    QRational& operator*=(const QRational& rhs);
    QRational& operator/=(const QRational& rhs);
    friend QRational operator+(QRational a, const QRational& b) { return a += b; }
    friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
    friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
    friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
    friend bool operator==(const QRational& a, const QRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void normalise();
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace hs
