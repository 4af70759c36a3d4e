#pragma once

#include <vector>

#include "shuffle/partition.hpp"
#include "shuffle/subset.hpp"

namespace shuffle {

// Filling of the Young diagram of shape with 1..n, each once, increasing left
// to right in rows and top to bottom in columns.
class StandardYoungTableau {
public:
    StandardYoungTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }

    friend bool operator==(const StandardYoungTableau&,
                           const StandardYoungTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

inline constexpr int kMaxTableauSize = 12;

// Every SYT of the shape exactly once.  Entries 1..n are placed in increasing
// order, trying rows top to bottom, so the output is ordered lexicographically
// by the row-assignment word of the entries.
std::vector<StandardYoungTableau> syt_enumerate(const Partition& shape);

// { i : i+1 lies in the same column as i or in a column further left }.
SubsetMask descent_set(const StandardYoungTableau& tableau);

}  // namespace shuffle
