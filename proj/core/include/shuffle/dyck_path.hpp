#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shuffle {

enum class Step : std::uint8_t { North, East };

// Lattice path of n north and n east unit steps from (0,0) to (n,n) staying
// weakly above y = x.  Rows are 1-based from the bottom: row r is the square
// immediately right of the r-th north step; its column is the number of east
// steps before that north step; diagonal(r) = r - 1 - column(r) >= 0 is the
// distance of the square from y = x.
class DyckPath {
public:
    static DyckPath from_steps(std::vector<Step> steps);
    static DyckPath from_string(std::string_view text);  // over {'N','E'}
    static DyckPath staircase(int n);                    // (NE)^n

    int order() const { return order_; }
    const std::vector<Step>& steps() const { return steps_; }
    std::string to_string() const;

    std::vector<int> row_columns() const;    // 0-based, weakly increasing
    std::vector<int> row_diagonals() const;  // r - 1 - column(r)
    int area() const;                        // sum of row diagonals

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    DyckPath(std::vector<Step> steps, int order)
        : steps_(std::move(steps)), order_(order) {}

    std::vector<Step> steps_;
    int order_ = 0;
};

// Enumeration is limited so callers cannot ask for hundreds of millions of
// materialized paths by accident.
inline constexpr int kMaxDyckOrder = 12;

// Every Dyck path of order n exactly once, lexicographic with North < East
// (so N^n E^n comes first and (NE)^n last); 1 <= n <= kMaxDyckOrder.
std::vector<DyckPath> enumerate_dyck_paths(int n);

// Catalan number via the binomial formula; exact, throws on overflow.
std::int64_t catalan_number(int n);

}  // namespace shuffle
