#pragma once

#include "hs/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hs {

/// Laurent polynomial in u = e^(hbar/2) with exact rational coefficients.
///
/// Stored as a list of (exponent, coefficient) pairs sorted by exponent with
/// no zero coefficients, so structural equality is value equality. Every
/// exponential e^(c*hbar) with c a half-integer is the monomial u^(2c), and
/// the q-integer [k] is u^k - u^-k.
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exponent, Rational coeff = 1);
    /// Builds from arbitrary (exponent, coeff) pairs; duplicates are summed.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coeff(int exponent) const;
    /// Lowest / highest exponent; undefined for the zero polynomial.
    int min_exponent() const { return terms_.front().first; }
    int max_exponent() const { return terms_.back().first; }
    const Rational& leading_coeff() const { return terms_.back().second; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Multiplication by u^k.
    LaurentPoly shifted(int k) const;
    /// p * [k], computed as u^k p - u^-k p.
    LaurentPoly times_qint(int k) const;
    /// The substitution u -> 1/u.
    LaurentPoly inverted() const;
    /// Content-free check: every coefficient is an integer.
    bool has_integer_coeffs() const;

    /// Human-readable form, e.g. "u^12 - 8*u^6 + 24*u^2 - 1".
    std::string to_string() const;

private:
    static void merge_into(std::vector<Term>& out, const std::vector<Term>& a,
                           const std::vector<Term>& b, bool subtract);
    std::vector<Term> terms_;
};

/// The q-integer [k] = u^k - u^-k. qint(0) is zero and qint(-k) = -qint(k).
LaurentPoly qint(int k);

/// Exact quotient num / den. Throws NonExactDivision when den does not divide
/// num in Q[u, 1/u], and std::domain_error when den is zero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// Division with remainder after shifting both to ordinary polynomials;
/// returns true iff den divides num, writing the quotient.
bool try_exact_div(const LaurentPoly& num, const LaurentPoly& den, LaurentPoly& quotient);

/// Greatest common divisor in Q[u, 1/u], normalised monic with lowest
/// exponent 0. gcd(0, 0) is 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Coefficient of hbar^k in the power series obtained from u = e^(hbar/2):
/// sum_e c_e (e/2)^k / k!.
Rational hbar_coeff(const LaurentPoly& p, unsigned k);

}  // namespace hs
