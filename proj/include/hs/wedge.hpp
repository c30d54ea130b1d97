#pragma once

#include "hs/partition.hpp"
#include "hs/qrational.hpp"

#include <map>
#include <vector>

namespace hs::wedge {

/// A ribbon (border strip) added to or removed from a Young diagram.
struct Ribbon {
    int size = 0;
    int height = 0;  // rows occupied minus one
    int sign = 1;    // (-1)^height
    int doubled_centre = 0;  // 2c; c is the mean content of the cells
    Partition result;
};

/// All ways to add a size-m ribbon to lambda, ordered by increasing centre.
std::vector<Ribbon> add_ribbons(const Partition& lambda, int m);
/// All ways to remove a size-m ribbon from lambda, ordered by increasing centre.
std::vector<Ribbon> remove_ribbons(const Partition& lambda, int m);

/// Finite linear combination of basis vectors v_lambda of the charge-zero
/// infinite wedge space, with coefficients in Q(u).
class WedgeVector {
public:
    WedgeVector() = default;
    static WedgeVector basis(const Partition& lambda);

    const std::map<Partition, QRational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Inner product with v_lambda.
    QRational coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const QRational& c);
    /// The component of degree |lambda| = n.
    WedgeVector degree_part(int n) const;

    WedgeVector& operator+=(const WedgeVector& rhs);
    WedgeVector& operator-=(const WedgeVector& rhs);
    WedgeVector& operator*=(const QRational& c);
    friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
    friend WedgeVector operator-(WedgeVector a, const WedgeVector& b) { return a -= b; }
    friend bool operator==(const WedgeVector& a, const WedgeVector& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    std::map<Partition, QRational> terms_;
};

/// Eigenvalue of E_0(b hbar) on v_lambda:
///   sum_i (e^{(alpha_i + 1/2) b hbar} - e^{-(beta_i + 1/2) b hbar}) + 1/[b].
/// Throws UndefinedOperator for b = 0.
QRational e0_eigenvalue(const Partition& lambda, int b);

/// E_a(b hbar) applied to v. Throws UndefinedOperator for (a, b) = (0, 0).
WedgeVector apply_E(int a, int b, const WedgeVector& v);

/// How check_commutation treats two operators that both have zero argument,
/// where the generic relation would produce E_0(0).
enum class DegenerateCommutator {
    excluded,  // throw UndefinedOperator
    bosonic,   // [E_m(0), E_n(0)] = delta_{m+n,0} m
};

/// Evaluates both sides of
///   [E_{a1}(b1 hbar), E_{a2}(b2 hbar)] = [a1 b2 - a2 b1] E_{a1+a2}((b1+b2) hbar)
/// on v_lambda and reports whether they agree exactly.
bool check_commutation(int a1, int b1, int a2, int b2, const Partition& lambda,
                       DegenerateCommutator degenerate = DegenerateCommutator::bosonic);

}  // namespace hs::wedge
