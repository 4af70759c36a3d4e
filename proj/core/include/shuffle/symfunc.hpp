#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shuffle/partition.hpp"
#include "shuffle/qt_polynomial.hpp"
#include "shuffle/subset.hpp"
#include "shuffle/tableau.hpp"

namespace shuffle {

// Index of a fundamental quasisymmetric function F_{n,S}, S a subset of [n-1].
struct FundamentalIndex {
    int degree;
    SubsetMask subset;

    friend bool operator==(const FundamentalIndex&, const FundamentalIndex&) = default;
};

// Homogeneous degree-n quasisymmetric function expanded in the fundamental
// basis, coefficients in Z[q,t].  Zero coefficients are never stored.
class FExpansion {
public:
    FExpansion() = default;  // inert degree-0 placeholder
    explicit FExpansion(int degree);

    int degree() const { return degree_; }
    bool empty() const { return terms_.empty(); }

    // coefficient of F_{n,s} += p; s must be a subset of [n-1].
    void add(SubsetMask s, const QtPolynomial& p);
    void add_term(SubsetMask s, int q_exp, int t_exp, std::int64_t coeff);

    QtPolynomial coefficient(SubsetMask s) const;
    const std::map<SubsetMask, QtPolynomial>& terms() const { return terms_; }

    FExpansion& operator+=(const FExpansion& other);  // degrees must match
    friend FExpansion operator+(FExpansion a, const FExpansion& b) {
        a += b;
        return a;
    }
    friend FExpansion operator*(const FExpansion& f, const QtPolynomial& p);

    std::string to_string() const;  // "(1)*F[2,{}] + (q + t)*F[2,{1}]"

    friend bool operator==(const FExpansion&, const FExpansion&) = default;

private:
    int degree_ = 0;
    std::map<SubsetMask, QtPolynomial> terms_;
};

// Homogeneous degree-n symmetric function expanded in the Schur basis.
class SchurExpansion {
public:
    SchurExpansion() = default;
    explicit SchurExpansion(int degree);

    int degree() const { return degree_; }
    bool empty() const { return terms_.empty(); }

    void add(const Partition& lambda, const QtPolynomial& p);
    QtPolynomial coefficient(const Partition& lambda) const;
    const std::map<Partition, QtPolynomial>& terms() const { return terms_; }

    SchurExpansion& operator+=(const SchurExpansion& other);

    SchurExpansion swap_qt() const;
    bool all_coefficients_nonnegative() const;

    std::string to_string() const;  // "(1)*s[2] + (q + t)*s[1,1]"

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    int degree_ = 0;
    std::map<Partition, QtPolynomial> terms_;
};

inline constexpr int kMaxSymfuncDegree = kMaxTableauSize;

// s_lambda as a sum of F_{n,Des(T)} over the SYT of shape lambda.
FExpansion schur_to_fundamental(const Partition& lambda);

// Inverse basis change, solved per (q,t)-bidegree as an exact integer linear
// system on the descent-set matrix.  Throws NotSymmetricError when the system
// is inconsistent and NonIntegralError when a slice solves only over Q.
SchurExpansion fundamental_to_schur(const FExpansion& f);

// Coefficient (0 or 1) of the monomial z_1^g1 ... z_l^gl in F_{n,S}: it is 1
// iff S is contained in the set of partial sums of gamma.
int fundamental_monomial_coefficient(const FundamentalIndex& index,
                                     const Composition& gamma);

// Same coefficient extended linearly over an expansion.
QtPolynomial expansion_monomial_coefficient(const FExpansion& f,
                                            const Composition& gamma);

// Total coefficient mass at q = t = 1.
std::int64_t dimension_specialization(const FExpansion& f);

// Schur index of the elementary symmetric function e_n, the column 1^n.
Partition e_n_index(int n);

// matrix[mask][j] = number of SYT of partitions_of(n)[j] with descent set
// mask; 2^(n-1) rows.
std::vector<std::vector<std::int64_t>> descent_matrix(int n);

}  // namespace shuffle
