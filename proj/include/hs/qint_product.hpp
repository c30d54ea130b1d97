#pragma once

#include "hs/laurent.hpp"
#include "hs/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

/// coeff * [k_1][k_2]...[k_l] with every k_i positive. The factor multiset is
/// kept sorted in descending order so printing and comparison are stable.
struct QIntProduct {
    std::vector<int> factors;
    Integer coeff = 1;

    QIntProduct() = default;
    QIntProduct(std::vector<int> f, Integer c);

    int factor_sum() const;
    std::size_t length() const { return factors.size(); }
    /// Adds [k] to the multiset. k must be positive.
    void multiply_qint(int k);

    /// "3[2]^3[1]^2"; the empty product prints as its coefficient.
    std::string to_string() const;
};

LaurentPoly expand(const QIntProduct& p);

/// A formal (unexpanded) sum of q-integer products, keyed by factor multiset.
/// This is the scalar the correlator engine carries when the caller wants the
/// q-integer form of a result rather than only its value.
class QIntSum {
public:
    QIntSum() = default;
    static QIntSum one();

    bool is_zero() const noexcept { return terms_.empty(); }
    QIntSum times_qint(int k) const;
    QIntSum& operator+=(const QIntSum& rhs);
    void add(const QIntProduct& p);

    /// Terms in descending order of factor multiset (largest brackets first).
    std::vector<QIntProduct> products() const;
    LaurentPoly expand() const;
    std::string to_string() const;

private:
    std::map<std::vector<int>, Integer> terms_;
};

LaurentPoly expand(const std::vector<QIntProduct>& sum);
std::string to_string(const std::vector<QIntProduct>& sum);

/// Parses sums of q-integer products such as "[6][2]^3 + 3[2]^4",
/// "3 [2]^3 [1]^2" or "2*[1]^4". Throws ParseError with the offending column.
std::vector<QIntProduct> parse_qproduct_sum(std::string_view text);

}  // namespace hs
