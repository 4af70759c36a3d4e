#include "shuffle/linear_solve.hpp"

#include <numeric>
#include <stdexcept>

namespace shuffle {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return std::gcd(a, b);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = checked_neg(num_);
        den_ = checked_neg(den_);
    }
    if (num_ == 0) {
        den_ = 1;
    } else {
        const std::int64_t g = gcd64(num_, den_);
        num_ /= g;
        den_ /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    // Cross-reduce before multiplying to keep intermediates small.
    const std::int64_t g1 = gcd64(a.num_, b.den_);
    const std::int64_t g2 = gcd64(b.num_, a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    return a * Rational(b.den_, b.num_);
}

ExactSolveResult solve_exact(const std::vector<std::vector<std::int64_t>>& a,
                             const std::vector<std::vector<std::int64_t>>& rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    const std::size_t k = rows == 0 ? 0 : rhs[0].size();
    if (rhs.size() != rows) throw std::invalid_argument("rhs row count mismatch");

    // Augmented matrix [A | rhs] over the rationals.
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + k));
    for (std::size_t r = 0; r < rows; ++r) {
        if (a[r].size() != cols || rhs[r].size() != k)
            throw std::invalid_argument("ragged input matrix");
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = Rational(a[r][c]);
        for (std::size_t j = 0; j < k; ++j) m[r][cols + j] = Rational(rhs[r][j]);
    }

    ExactSolveResult result;
    std::vector<std::size_t> pivot_row_of_col(cols);
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && m[r][c].is_zero()) ++r;
        if (r == rows) {
            result.status = SolveStatus::Underdetermined;
            return result;
        }
        std::swap(m[r], m[pivot_row]);
        const Rational inv = Rational(1) / m[pivot_row][c];
        for (std::size_t j = c; j < cols + k; ++j)
            m[pivot_row][j] = m[pivot_row][j] * inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == pivot_row || m[rr][c].is_zero()) continue;
            const Rational factor = m[rr][c];
            for (std::size_t j = c; j < cols + k; ++j)
                m[rr][j] = m[rr][j] - factor * m[pivot_row][j];
        }
        pivot_row_of_col[c] = pivot_row;
        ++pivot_row;
    }

    // Rows below the pivots must be zero for a right-hand side to be solvable.
    result.consistent.assign(k, 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (!m[r][cols + j].is_zero()) {
                result.consistent[j] = 0;
                break;
            }

    result.solutions.assign(k, {});
    for (std::size_t j = 0; j < k; ++j) {
        if (!result.consistent[j]) continue;
        std::vector<Rational> x(cols);
        for (std::size_t c = 0; c < cols; ++c) x[c] = m[pivot_row_of_col[c]][cols + j];
        result.solutions[j] = std::move(x);
    }
    return result;
}

}  // namespace shuffle
