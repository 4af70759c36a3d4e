#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shuffle/checked.hpp"

namespace shuffle {

struct QtTerm {
    int q_exp;
    int t_exp;
    std::int64_t coeff;

    friend bool operator==(const QtTerm&, const QtTerm&) = default;
};

// Sparse exact polynomial in q and t with int64 coefficients.  Exponents are
// nonnegative; zero coefficients are never stored, so equal polynomials have
// identical term maps.  Canonical term order is graded: lower total degree
// first, larger q-exponent first within a degree (1, q, t, q^2, q*t, t^2, ...).
class QtPolynomial {
public:
    struct Exponents {
        int q;
        int t;

        friend bool operator==(const Exponents&, const Exponents&) = default;
    };
    struct TermOrder {
        bool operator()(const Exponents& a, const Exponents& b) const {
            const int da = a.q + a.t, db = b.q + b.t;
            if (da != db) return da < db;
            return a.q > b.q;
        }
    };
    using TermMap = std::map<Exponents, std::int64_t, TermOrder>;

    QtPolynomial() = default;  // zero

    static QtPolynomial constant(std::int64_t c);
    static QtPolynomial monomial(int q_exp, int t_exp, std::int64_t coeff = 1);
    static QtPolynomial from_terms(const std::vector<QtTerm>& terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::int64_t coefficient(int q_exp, int t_exp) const;
    std::vector<QtTerm> terms() const;  // canonical order
    bool all_coefficients_nonnegative() const;

    // p += coeff * q^a * t^b, dropping the term if it cancels.
    void add_term(int q_exp, int t_exp, std::int64_t coeff);

    QtPolynomial& operator+=(const QtPolynomial& other);
    QtPolynomial& operator-=(const QtPolynomial& other);
    QtPolynomial operator-() const;

    friend QtPolynomial operator+(QtPolynomial a, const QtPolynomial& b) {
        a += b;
        return a;
    }
    friend QtPolynomial operator-(QtPolynomial a, const QtPolynomial& b) {
        a -= b;
        return a;
    }
    friend QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b);

    // Exact integer evaluation at q = q0, t = t0.
    std::int64_t evaluate(std::int64_t q0, std::int64_t t0) const;

    // Exchanges the roles of q and t; an involution.
    QtPolynomial swap_qt() const;

    std::string to_string() const;  // "1 + q*t - 2*t^3", "0" when zero

    friend bool operator==(const QtPolynomial&, const QtPolynomial&) = default;

private:
    TermMap terms_;
};

}  // namespace shuffle
