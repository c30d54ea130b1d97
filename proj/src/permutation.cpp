#include "hs/permutation.hpp"

#include "hs/errors.hpp"
#include "hs/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hs {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("Permutation: images must be a rearrangement of 0..d-1");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> v(static_cast<std::size_t>(d));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int d, int a, int b) {
    Permutation p = identity(d);
    std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
    return p;
}

Permutation Permutation::with_cycle_type(const std::vector<int>& mu) {
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    std::vector<int> v(static_cast<std::size_t>(d));
    int start = 0;
    for (int len : mu) {
        for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return Permutation(std::move(v));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int s = 0; s < degree(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> c;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = true;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> out;
    for (const auto& c : cycles()) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int Permutation::sign() const { return cycle_type_sign(cycle_type()); }

std::string Permutation::to_string() const {
    std::string out;
    for (const auto& c : cycles()) {
        out += "(";
        for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i] + 1);
        out += ")";
    }
    return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> v(q.images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p(q.images_[i]);
    Permutation r;
    r.images_ = std::move(v);
    return r;
}

int cycle_type_sign(const std::vector<int>& mu) {
    int even_cycles = 0;
    for (int p : mu)
        if (p % 2 == 0) ++even_cycles;
    return even_cycles % 2 == 0 ? 1 : -1;
}

std::uint64_t automorphisms(const std::vector<int>& mu) {
    std::map<int, int> mult;
    for (int p : mu) ++mult[p];
    std::uint64_t out = 1;
    for (auto [p, c] : mult)
        for (int i = 2; i <= c; ++i) out *= static_cast<std::uint64_t>(i);
    return out;
}

std::vector<Transposition> transpositions(int d) {
    std::vector<Transposition> out;
    for (int b = 1; b < d; ++b)
        for (int a = 0; a < b; ++a) out.push_back({a, b});
    return out;
}

namespace {

std::size_t lehmer_rank(const std::vector<int>& v) {
    const std::size_t n = v.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (v[j] < v[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int d) : d_(d) {
    if (d < 1) throw InvalidQuery("degree must be positive");
    if (d > 8) throw DegreeTooLarge("S_" + std::to_string(d) + " is too large to tabulate");
    std::vector<int> v(static_cast<std::size_t>(d));
    std::iota(v.begin(), v.end(), 0);
    do {
        perms_.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    transpositions_ = hs::transpositions(d);
    for (const Partition& p : partitions_of(d)) classes_.push_back(p.parts());
    std::map<std::vector<int>, std::uint32_t> class_ids;
    for (std::size_t i = 0; i < classes_.size(); ++i) class_ids[classes_[i]] = static_cast<std::uint32_t>(i);

    right_.resize(perms_.size() * transpositions_.size());
    class_of_.resize(perms_.size());
    for (std::size_t i = 0; i < perms_.size(); ++i) {
        class_of_[i] = class_ids.at(perms_[i].cycle_type());
        for (std::size_t t = 0; t < transpositions_.size(); ++t) {
            // (p * (a b))(x) = p((a b) x): swap the images of a and b.
            std::vector<int> w = perms_[i].images();
            std::swap(w[static_cast<std::size_t>(transpositions_[t].a)], w[static_cast<std::size_t>(transpositions_[t].b)]);
            right_[i * transpositions_.size() + t] = static_cast<std::uint32_t>(lehmer_rank(w));
        }
    }
}

std::size_t SymmetricGroup::rank(const Permutation& p) const {
    if (p.degree() != d_) throw std::invalid_argument("SymmetricGroup::rank: degree mismatch");
    return lehmer_rank(p.images());
}

std::size_t SymmetricGroup::class_index(const std::vector<int>& mu) const {
    std::vector<int> sorted = mu;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    auto it = std::find(classes_.begin(), classes_.end(), sorted);
    if (it == classes_.end()) throw InvalidQuery("profile does not partition " + std::to_string(d_));
    return static_cast<std::size_t>(it - classes_.begin());
}

const SymmetricGroup& SymmetricGroup::get(int d) {
    static std::mutex lock;
    static std::map<int, std::unique_ptr<SymmetricGroup>> groups;
    std::lock_guard guard(lock);
    auto& slot = groups[d];
    if (!slot) slot = std::make_unique<SymmetricGroup>(d);
    return *slot;
}

}  // namespace hs
