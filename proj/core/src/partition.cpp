#include "shuffle/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "shuffle/checked.hpp"

namespace shuffle {

namespace {

int checked_parts_sum(const std::vector<int>& parts) {
    std::int64_t sum = 0;
    for (int p : parts) sum = checked_add(sum, p);
    if (sum > INT32_MAX) throw std::invalid_argument("partition size too large");
    return static_cast<int>(sum);
}

std::string join_parts(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = checked_parts_sum(parts_);
}

Partition Partition::single_row(int n) {
    if (n < 1) throw std::invalid_argument("single_row needs n >= 1");
    return Partition({n});
}

Partition Partition::single_column(int n) {
    if (n < 1) throw std::invalid_argument("single_column needs n >= 1");
    return Partition(std::vector<int>(n, 1));
}

std::string Partition::to_string() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("composition must have at least one part");
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    size_ = checked_parts_sum(parts_);
}

std::string Composition::to_string() const { return join_parts(parts_); }

Partition transpose(const Partition& lambda) {
    if (lambda.length() == 0) return Partition{};
    std::vector<int> conj;
    const int first = lambda.parts().front();
    conj.reserve(first);
    for (int i = 1; i <= first; ++i) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= i) ++count;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

std::int64_t n_stat(const Partition& lambda) {
    std::int64_t total = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        total = checked_add(total, checked_mul(parts[i], static_cast<std::int64_t>(i)));
    return total;
}

namespace {

// Weakly decreasing parts, lexicographically smallest continuation first:
// each part runs 1..cap ascending and caps the parts after it.
void emit_partitions(int remaining, int cap, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int part = 1; part <= std::min(remaining, cap); ++part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

void emit_compositions(int remaining, std::vector<int>& prefix,
                       std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition(prefix));
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        emit_compositions(remaining - part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of needs n >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    // Building the parts smallest-first and reversing yields the partitions in
    // lexicographic order of their weakly decreasing lists.
    emit_partitions(n, n, prefix, out);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 1) throw std::invalid_argument("compositions_of needs n >= 1");
    std::vector<Composition> out;
    std::vector<int> prefix;
    emit_compositions(n, prefix, out);
    return out;
}

Composition composition_of(const Partition& lambda) {
    return Composition(lambda.parts());
}

}  // namespace shuffle
