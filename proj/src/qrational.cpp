#include "hs/qrational.hpp"

#include <stdexcept>

namespace hs {

QRational::QRational(LaurentPoly value) : num_(std::move(value)), den_(1) {}

QRational::QRational(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRational: zero denominator");
    normalise();
}

void QRational::normalise() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.size() > 1) {
        LaurentPoly g = gcd(num_, den_);
        if (g.size() > 1) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    // den -> monic with lowest exponent 0; num absorbs the unit.
    const int shift = den_.min_exponent();
    const Rational lead = den_.leading_coeff();
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
    if (lead != 1) {
        num_ *= Rational(1) / lead;
        den_ *= Rational(1) / lead;
    }
}

std::optional<LaurentPoly> QRational::to_laurent() const {
    if (!is_laurent()) return std::nullopt;
    return num_;  // den is exactly 1 in normal form
}

QRational& QRational::operator+=(const QRational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalise();
    return *this;
}

QRational& QRational::operator-=(const QRational& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
    } else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalise();
    return *this;
}

QRational& QRational::operator*=(const QRational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalise();
    return *this;
}

QRational& QRational::operator/=(const QRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("QRational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalise();
    return *this;
}

std::string QRational::to_string() const {
    if (den_.size() == 1) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace hs
