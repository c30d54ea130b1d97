#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

/// Frobenius coordinates (alpha_1, ..., alpha_d | beta_1, ..., beta_d).
struct Frobenius {
    std::vector<int> alpha;
    std::vector<int> beta;
    std::string to_string() const;  // "(3,1|1,0)"
    friend bool operator==(const Frobenius&, const Frobenius&) = default;
};

/// An integer partition: a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts);

    /// Sorts arbitrary positive parts into a partition.
    static Partition from_unsorted(std::vector<int> parts);
    /// Parses "4,3" (empty string or "0" gives the empty partition).
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const;
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    Frobenius frobenius() const;

    /// Comma-separated parts, "" for the empty partition.
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace hs
