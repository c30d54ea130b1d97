#include "hs/partition.hpp"

#include "hs/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hs {

std::string Frobenius::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << "|";
    for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
    os << ")";
    return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string s(text);
    if (s.empty() || s == "0") return {};
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size() || v <= 0) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("partition '" + s + "': bad part '" + item + "'");
        }
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw ParseError("partition '" + s + "' is not weakly decreasing");
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

Frobenius Partition::frobenius() const {
    Frobenius f;
    const Partition c = conjugate();
    for (std::size_t i = 0; i < parts_.size() && parts_[i] > static_cast<int>(i); ++i) {
        f.alpha.push_back(parts_[i] - static_cast<int>(i) - 1);
        f.beta.push_back(c.parts_[i] - static_cast<int>(i) - 1);
    }
    return f;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace hs
