#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace shuffle {

// Partition of n: weakly decreasing positive parts.  Partitions compare
// lexicographically on the parts list; that order is also the canonical
// serialization order, so [1,1,1] < [2,1] < [3].
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int n);     // (n)
    static Partition single_column(int n);  // 1^n

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    std::string to_string() const;  // "3,3,2"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Composition of n: positive parts in a fixed order.  Same canonical
// (lexicographic) order as partitions.
class Composition {
public:
    Composition() = default;  // the empty composition of 0
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// lambda'_i = number of parts of lambda that are >= i.
Partition transpose(const Partition& lambda);

// n(lambda) = sum of lambda_i * (i - 1).
std::int64_t n_stat(const Partition& lambda);

// All partitions of n in canonical (lexicographic) order; n >= 1.
std::vector<Partition> partitions_of(int n);

// All 2^(n-1) compositions of n in canonical order; n >= 1.
std::vector<Composition> compositions_of(int n);

// The same parts read as a composition.
Composition composition_of(const Partition& lambda);

}  // namespace shuffle
