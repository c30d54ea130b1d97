#include "hs/wedge.hpp"

#include "hs/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace hs::wedge {

namespace {

// Beta-set (Maya diagram) encoding: position_i = lambda_i - i for
// i = 1..len, padded with -i so that a single m-move never reaches the
// implicit all-occupied tail. Moving a bead from p to p + m adds a ribbon
// whose cells have contents p+1 .. p+m; the beads jumped over count its
// height.
std::vector<int> beta_set(const Partition& lambda, int pad) {
    const int len = static_cast<int>(lambda.length()) + pad;
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) beta[static_cast<std::size_t>(i - 1)] = lambda[static_cast<std::size_t>(i - 1)] - i;
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int part = beta[i] + static_cast<int>(i) + 1;
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::vector<Ribbon> move_beads(const Partition& lambda, int m, int direction) {
    if (m < 1) throw std::invalid_argument("ribbon size must be positive");
    const std::vector<int> beta = beta_set(lambda, m);
    const std::set<int> occupied(beta.begin(), beta.end());
    std::vector<Ribbon> out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int from = beta[i];
        const int to = from + direction * m;
        if (occupied.count(to)) continue;
        // Removal can only move beads that sit above the padded tail.
        if (direction < 0 && i >= lambda.length()) continue;
        const int lo = std::min(from, to), hi = std::max(from, to);
        const int height = static_cast<int>(std::distance(occupied.upper_bound(lo), occupied.lower_bound(hi)));
        std::vector<int> next = beta;
        next[i] = to;
        Ribbon r;
        r.size = m;
        r.height = height;
        r.sign = height % 2 == 0 ? 1 : -1;
        // Cells have contents lo+1 .. hi.
        r.doubled_centre = 2 * lo + m + 1;
        r.result = from_beta(std::move(next));
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const Ribbon& a, const Ribbon& b) { return a.doubled_centre < b.doubled_centre; });
    return out;
}

}  // namespace

std::vector<Ribbon> add_ribbons(const Partition& lambda, int m) { return move_beads(lambda, m, +1); }

std::vector<Ribbon> remove_ribbons(const Partition& lambda, int m) { return move_beads(lambda, m, -1); }

WedgeVector WedgeVector::basis(const Partition& lambda) {
    WedgeVector v;
    v.terms_.emplace(lambda, QRational(LaurentPoly(1)));
    return v;
}

QRational WedgeVector::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QRational() : it->second;
}

void WedgeVector::add(const Partition& lambda, const QRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WedgeVector WedgeVector::degree_part(int n) const {
    WedgeVector out;
    for (const auto& [lambda, c] : terms_)
        if (lambda.size() == n) out.terms_.emplace(lambda, c);
    return out;
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& rhs) {
    for (const auto& [lambda, c] : rhs.terms_) add(lambda, c);
    return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& rhs) {
    const QRational minus_one(LaurentPoly(-1));
    for (const auto& [lambda, c] : rhs.terms_) add(lambda, c * minus_one);
    return *this;
}

WedgeVector& WedgeVector::operator*=(const QRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, x] : terms_) x *= c;
    return *this;
}

std::string WedgeVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*v[" << lambda.to_string() << "]";
    }
    return os.str();
}

QRational e0_eigenvalue(const Partition& lambda, int b) {
    if (b == 0) throw UndefinedOperator("E_0(0)");
    const Frobenius f = lambda.frobenius();
    LaurentPoly sum;
    for (std::size_t i = 0; i < f.alpha.size(); ++i) {
        sum += LaurentPoly::monomial((2 * f.alpha[i] + 1) * b, 1);
        sum -= LaurentPoly::monomial(-(2 * f.beta[i] + 1) * b, 1);
    }
    // sum + 1/[b] = (sum*[b] + 1) / [b]
    return QRational(sum.times_qint(b) + LaurentPoly(1), qint(b));
}

WedgeVector apply_E(int a, int b, const WedgeVector& v) {
    if (a == 0 && b == 0) throw UndefinedOperator("E_0(0)");
    WedgeVector out;
    for (const auto& [lambda, c] : v.terms()) {
        if (a == 0) {
            out.add(lambda, c * e0_eigenvalue(lambda, b));
            continue;
        }
        const auto ribbons = a < 0 ? add_ribbons(lambda, -a) : remove_ribbons(lambda, a);
        for (const auto& r : ribbons) {
            // sign * e^{c z} with z = b hbar is sign * u^{2c b}.
            const LaurentPoly weight = LaurentPoly::monomial(r.doubled_centre * b, r.sign);
            out.add(r.result, c * QRational(weight));
        }
    }
    return out;
}

bool check_commutation(int a1, int b1, int a2, int b2, const Partition& lambda, DegenerateCommutator degenerate) {
    if ((a1 == 0 && b1 == 0) || (a2 == 0 && b2 == 0)) throw UndefinedOperator("E_0(0) in commutator");
    const WedgeVector v = WedgeVector::basis(lambda);
    const WedgeVector lhs = apply_E(a1, b1, apply_E(a2, b2, v)) - apply_E(a2, b2, apply_E(a1, b1, v));
    WedgeVector rhs;
    if (b1 == 0 && b2 == 0) {
        if (degenerate == DegenerateCommutator::excluded)
            throw UndefinedOperator("commutator of two operators with zero argument");
        if (a1 + a2 == 0) {
            rhs = v;
            rhs *= QRational(LaurentPoly(a1));
        }
    } else {
        const int t = a1 * b2 - a2 * b1;
        if (t != 0) {
            rhs = apply_E(a1 + a2, b1 + b2, v);
            rhs *= QRational(qint(t));
        }
    }
    return lhs == rhs;
}

}  // namespace hs::wedge
