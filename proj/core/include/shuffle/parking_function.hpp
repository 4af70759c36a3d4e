#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shuffle/dyck_path.hpp"
#include "shuffle/partition.hpp"
#include "shuffle/subset.hpp"

namespace shuffle {

// Dyck path with car labels: cars[r-1] is the label in row r.  The labels are
// a permutation of 1..n and increase bottom to top within each column.
class ParkingFunction {
public:
    ParkingFunction(DyckPath path, std::vector<int> cars);

    const DyckPath& path() const { return path_; }
    const std::vector<int>& cars() const { return cars_; }
    int order() const { return path_.order(); }

    friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

private:
    DyckPath path_;
    std::vector<int> cars_;
};

struct CarPosition {
    int row;       // 1-based from the bottom
    int column;    // 0-based
    int diagonal;  // row - 1 - column, distance from y = x

    friend bool operator==(const CarPosition&, const CarPosition&) = default;
};

// One position per row, bottom to top.
std::vector<CarPosition> car_positions(const ParkingFunction& pf);

// Complete squares between the path and y = x; equals the sum of diagonals.
int area(const ParkingFunction& pf);

// Unordered car pairs stored as (smaller label, larger label), sorted.
struct DinvPairs {
    std::vector<std::pair<int, int>> primary;    // same diagonal, larger car strictly right
    std::vector<std::pair<int, int>> secondary;  // adjacent diagonals, larger car higher and strictly left
};

DinvPairs dinv_pairs(const ParkingFunction& pf);
int dinv(const ParkingFunction& pf);

// Cars read by strictly decreasing diagonal, right to left within a diagonal.
std::vector<int> word(const ParkingFunction& pf);

// { i : i+1 appears left of i in word(pf) }; the descent set of the inverse
// of word(pf).
SubsetMask ides(const ParkingFunction& pf);

// Gaps between the rows whose car sits on y = x; parts sum to n.  The touch
// composition depends only on the path, hence the path overload.
Composition touch(const DyckPath& path);
Composition touch(const ParkingFunction& pf);

// True iff each consecutive block [1..b1], [b1+1..b1+b2], ... of block sizes
// appears in increasing order inside w.  w must be a permutation of 1..n with
// n = |blocks|.
bool is_shuffle(const std::vector<int>& w, const Partition& blocks);

// Text codec "path=NNEE;cars=2,1" (cars bottom row first).  Parsing validates
// the full parking-function invariant and throws std::invalid_argument.
ParkingFunction parse_parking_function(std::string_view text);
std::string format_parking_function(const ParkingFunction& pf);

// ---------------------------------------------------------------------------
// Enumeration.
//
// Canonical order: paths lexicographic (North < East); within a path the
// labels are distributed over the column groups left to right, each group
// stepping through the label subsets of its size in lexicographic order, and
// labels inside a group sorted increasing bottom to top.
// ---------------------------------------------------------------------------

// Maximal runs of rows sharing a column, in column order.
struct ColumnGroup {
    int first_row;  // 1-based
    int count;
};
std::vector<ColumnGroup> column_groups(const DyckPath& path);

// Walks the labelings of one path in canonical order without materializing
// them.  cars() is valid from construction on and is rewritten by advance().
class LabelingOdometer {
public:
    explicit LabelingOdometer(const DyckPath& path);

    const std::vector<int>& cars() const { return cars_; }
    bool advance();  // false once exhausted

private:
    bool next_combination(std::vector<int>& comb, int pool_size);
    void refill_from(std::size_t level);
    void write_group(std::size_t level);

    std::vector<ColumnGroup> groups_;
    std::vector<std::vector<int>> pools_;  // labels available to each group, sorted
    std::vector<std::vector<int>> combs_;  // ascending index choices into pools_
    std::vector<int> cars_;
};

inline constexpr int kMaxParkingOrder = 9;

// Streams PF_n in canonical order with constant memory per consumer.  The
// two-argument form restricts to the paths with index in [path_begin,
// path_end), which partitions the stream into disjoint chunks.
class ParkingFunctionStream {
public:
    explicit ParkingFunctionStream(int n);
    ParkingFunctionStream(int n, std::size_t path_begin, std::size_t path_end);

    std::optional<ParkingFunction> next();
    std::size_t path_count() const { return paths_.size(); }

private:
    std::vector<DyckPath> paths_;
    std::size_t path_index_ = 0;
    std::size_t path_end_ = 0;
    std::optional<LabelingOdometer> odometer_;
};

std::vector<ParkingFunction> enumerate_parking_functions(int n);

// Visits every labeling of one path; the cars vector is reused between calls.
template <typename Fn>
void for_each_labeling(const DyckPath& path, Fn&& fn) {
    LabelingOdometer odometer(path);
    do {
        fn(odometer.cars());
    } while (odometer.advance());
}

// (n+1)^(n-1), exact.
std::int64_t parking_function_count(int n);

}  // namespace shuffle
