#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hs {

/// A permutation of {0, ..., d-1} stored as its array of images. Products
/// compose right to left: (p * q)(x) = p(q(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // throws std::invalid_argument

    static Permutation identity(int d);
    static Permutation transposition(int d, int a, int b);
    /// (0 1 ... mu_1-1)(mu_1 ... mu_1+mu_2-1)...
    static Permutation with_cycle_type(const std::vector<int>& mu);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    /// Cycle lengths in weakly decreasing order, fixed points included.
    std::vector<int> cycle_type() const;
    int sign() const;
    std::vector<std::vector<int>> cycles() const;
    std::string to_string() const;  // cycle notation, 1-based: "(1 2)(3)"

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Sign of any permutation with the given cycle type.
int cycle_type_sign(const std::vector<int>& mu);
/// |Aut(mu)|: product of factorials of part multiplicities.
std::uint64_t automorphisms(const std::vector<int>& mu);

/// The transpositions (a b), a < b, of S_d ordered by b then a: the order in
/// which monotone tuples are weakly increasing.
struct Transposition {
    int a = 0;
    int b = 0;
};
std::vector<Transposition> transpositions(int d);

/// Dense indexing of S_d by Lehmer rank, with cached cycle types and
/// right multiplication by every transposition. Practical for d <= 7.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int d);  // throws DegreeTooLarge for d > 8

    int degree() const noexcept { return d_; }
    std::size_t order() const noexcept { return perms_.size(); }
    const Permutation& element(std::size_t i) const { return perms_[i]; }
    std::size_t rank(const Permutation& p) const;
    std::size_t identity_rank() const { return 0; }

    const std::vector<Transposition>& transpositions() const noexcept { return transpositions_; }
    /// Rank of element(i) * transposition t.
    std::uint32_t times(std::size_t i, std::size_t t) const { return right_[i * transpositions_.size() + t]; }
    /// Index into classes() of the cycle type of element(i).
    std::uint32_t class_of(std::size_t i) const { return class_of_[i]; }
    /// All cycle types of S_d, weakly decreasing parts, in partitions_of order.
    const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }
    /// Index of mu (any order of parts) in classes(); throws InvalidQuery.
    std::size_t class_index(const std::vector<int>& mu) const;

    /// Shared instance per degree.
    static const SymmetricGroup& get(int d);

private:
    int d_;
    std::vector<Permutation> perms_;
    std::vector<Transposition> transpositions_;
    std::vector<std::uint32_t> right_;
    std::vector<std::uint32_t> class_of_;
    std::vector<std::vector<int>> classes_;
};

}  // namespace hs
