#pragma once

#include <cstdint>
#include <vector>

#include "shuffle/checked.hpp"

namespace shuffle {

// Exact rational on checked 64-bit integers; always reduced, denominator > 0.
class Rational {
public:
    Rational() = default;  // zero
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational&, const Rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

enum class SolveStatus { Ok, Underdetermined };

// Gauss-Jordan elimination over the rationals for A x = b with several
// right-hand sides at once.  A is rows x cols with rows >= cols expected.
//
// status Underdetermined: A lacks full column rank; nothing else is filled.
// status Ok: consistent[j] says whether right-hand side j is solvable, and
// solutions[j] holds its unique solution when it is (empty otherwise).
struct ExactSolveResult {
    SolveStatus status = SolveStatus::Ok;
    std::vector<std::uint8_t> consistent;
    std::vector<std::vector<Rational>> solutions;  // [rhs][col]
};

// a[row][col]; rhs[row][j].
ExactSolveResult solve_exact(const std::vector<std::vector<std::int64_t>>& a,
                             const std::vector<std::vector<std::int64_t>>& rhs);

}  // namespace shuffle
