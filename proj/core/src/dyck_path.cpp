#include "shuffle/dyck_path.hpp"

#include <stdexcept>

#include "shuffle/checked.hpp"

namespace shuffle {

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
    if (steps.empty() || steps.size() % 2 != 0)
        throw std::invalid_argument("a Dyck path has a positive even number of steps");
    int norths = 0, easts = 0;
    for (Step s : steps) {
        if (s == Step::North)
            ++norths;
        else
            ++easts;
        if (easts > norths)
            throw std::invalid_argument("path drops below the diagonal y = x");
    }
    if (norths != easts)
        throw std::invalid_argument("path needs equally many north and east steps");
    return DyckPath(std::move(steps), norths);
}

DyckPath DyckPath::from_string(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (c == 'N')
            steps.push_back(Step::North);
        else if (c == 'E')
            steps.push_back(Step::East);
        else
            throw std::invalid_argument("path characters must be 'N' or 'E'");
    }
    return from_steps(std::move(steps));
}

DyckPath DyckPath::staircase(int n) {
    if (n < 1) throw std::invalid_argument("staircase needs n >= 1");
    std::vector<Step> steps;
    steps.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        steps.push_back(Step::North);
        steps.push_back(Step::East);
    }
    return DyckPath(std::move(steps), n);
}

std::string DyckPath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += (s == Step::North) ? 'N' : 'E';
    return out;
}

std::vector<int> DyckPath::row_columns() const {
    std::vector<int> columns;
    columns.reserve(order_);
    int easts = 0;
    for (Step s : steps_) {
        if (s == Step::East)
            ++easts;
        else
            columns.push_back(easts);
    }
    return columns;
}

std::vector<int> DyckPath::row_diagonals() const {
    std::vector<int> diagonals = row_columns();
    for (int r = 0; r < order_; ++r) diagonals[r] = r - diagonals[r];
    return diagonals;
}

int DyckPath::area() const {
    int total = 0;
    for (int d : row_diagonals()) total += d;
    return total;
}

namespace {

void emit_paths(int n, int norths, int easts, std::vector<Step>& prefix,
                std::vector<DyckPath>& out) {
    if (static_cast<int>(prefix.size()) == 2 * n) {
        out.push_back(DyckPath::from_steps(prefix));
        return;
    }
    // North before East keeps the output lexicographic.
    if (norths < n) {
        prefix.push_back(Step::North);
        emit_paths(n, norths + 1, easts, prefix, out);
        prefix.pop_back();
    }
    if (easts < norths) {
        prefix.push_back(Step::East);
        emit_paths(n, norths, easts + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DyckPath> enumerate_dyck_paths(int n) {
    if (n < 1 || n > kMaxDyckOrder)
        throw std::invalid_argument("enumerate_dyck_paths supports 1 <= n <= " +
                                    std::to_string(kMaxDyckOrder));
    std::vector<DyckPath> out;
    std::vector<Step> prefix;
    prefix.reserve(2 * n);
    emit_paths(n, 0, 0, prefix, out);
    return out;
}

std::int64_t catalan_number(int n) {
    if (n < 0) throw std::invalid_argument("catalan_number needs n >= 0");
    // binom(2n, n) built incrementally; every intermediate is exact.
    std::int64_t binom = 1;
    for (int i = 1; i <= n; ++i) binom = checked_mul(binom, n + i) / i;
    return binom / (n + 1);
}

}  // namespace shuffle
