#include "shuffle/qt_polynomial.hpp"

#include <stdexcept>

namespace shuffle {

QtPolynomial QtPolynomial::constant(std::int64_t c) { return monomial(0, 0, c); }

QtPolynomial QtPolynomial::monomial(int q_exp, int t_exp, std::int64_t coeff) {
    QtPolynomial p;
    p.add_term(q_exp, t_exp, coeff);
    return p;
}

QtPolynomial QtPolynomial::from_terms(const std::vector<QtTerm>& terms) {
    QtPolynomial p;
    for (const QtTerm& term : terms) p.add_term(term.q_exp, term.t_exp, term.coeff);
    return p;
}

std::int64_t QtPolynomial::coefficient(int q_exp, int t_exp) const {
    const auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? 0 : it->second;
}

std::vector<QtTerm> QtPolynomial::terms() const {
    std::vector<QtTerm> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({e.q, e.t, c});
    return out;
}

bool QtPolynomial::all_coefficients_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

void QtPolynomial::add_term(int q_exp, int t_exp, std::int64_t coeff) {
    if (q_exp < 0 || t_exp < 0)
        throw std::invalid_argument("exponents must be nonnegative");
    if (coeff == 0) return;
    const Exponents key{q_exp, t_exp};
    const auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

QtPolynomial& QtPolynomial::operator+=(const QtPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, c);
    return *this;
}

QtPolynomial& QtPolynomial::operator-=(const QtPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, checked_neg(c));
    return *this;
}

QtPolynomial QtPolynomial::operator-() const {
    QtPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, checked_neg(c));
    return out;
}

QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b) {
    QtPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea.q + eb.q, ea.t + eb.t, checked_mul(ca, cb));
    return out;
}

std::int64_t QtPolynomial::evaluate(std::int64_t q0, std::int64_t t0) const {
    std::int64_t total = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t term = checked_mul(c, checked_pow(q0, e.q));
        term = checked_mul(term, checked_pow(t0, e.t));
        total = checked_add(total, term);
    }
    return total;
}

QtPolynomial QtPolynomial::swap_qt() const {
    QtPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.t, e.q}, c);
    return out;
}

namespace {

void append_monomial(std::string& out, int q_exp, int t_exp, std::int64_t magnitude) {
    bool printed = false;
    if (magnitude != 1 || (q_exp == 0 && t_exp == 0)) {
        out += std::to_string(magnitude);
        printed = true;
    }
    if (q_exp > 0) {
        if (printed) out += '*';
        out += 'q';
        if (q_exp > 1) out += '^' + std::to_string(q_exp);
        printed = true;
    }
    if (t_exp > 0) {
        if (printed) out += '*';
        out += 't';
        if (t_exp > 1) out += '^' + std::to_string(t_exp);
    }
}

}  // namespace

std::string QtPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        const std::int64_t magnitude = (c < 0) ? checked_neg(c) : c;
        append_monomial(out, e.q, e.t, magnitude);
        first = false;
    }
    return out;
}

}  // namespace shuffle
