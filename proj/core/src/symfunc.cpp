#include "shuffle/symfunc.hpp"

#include <stdexcept>

#include "shuffle/checked.hpp"
#include "shuffle/linear_solve.hpp"

namespace shuffle {

FExpansion::FExpansion(int degree) : degree_(degree) {
    if (degree < 1 || degree > 31)
        throw std::invalid_argument("FExpansion degree must be in 1..31");
}

void FExpansion::add(SubsetMask s, const QtPolynomial& p) {
    if (!subset_within(s, degree_))
        throw std::invalid_argument("subset not contained in [n-1]");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FExpansion::add_term(SubsetMask s, int q_exp, int t_exp, std::int64_t coeff) {
    if (!subset_within(s, degree_))
        throw std::invalid_argument("subset not contained in [n-1]");
    if (coeff == 0) return;
    auto& poly = terms_[s];
    poly.add_term(q_exp, t_exp, coeff);
    if (poly.is_zero()) terms_.erase(s);
}

QtPolynomial FExpansion::coefficient(SubsetMask s) const {
    const auto it = terms_.find(s);
    return it == terms_.end() ? QtPolynomial{} : it->second;
}

FExpansion& FExpansion::operator+=(const FExpansion& other) {
    if (degree_ != other.degree_)
        throw std::invalid_argument("cannot add expansions of different degrees");
    for (const auto& [s, p] : other.terms_) add(s, p);
    return *this;
}

FExpansion operator*(const FExpansion& f, const QtPolynomial& p) {
    FExpansion out(f.degree());
    if (p.is_zero()) return out;
    for (const auto& [s, coeff] : f.terms()) out.add(s, coeff * p);
    return out;
}

std::string FExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, p] : terms_) {
        if (!first) out += " + ";
        out += "(" + p.to_string() + ")*F[" + std::to_string(degree_) + "," +
               subset_to_string(s) + "]";
        first = false;
    }
    return out;
}

SchurExpansion::SchurExpansion(int degree) : degree_(degree) {
    if (degree < 1 || degree > 31)
        throw std::invalid_argument("SchurExpansion degree must be in 1..31");
}

void SchurExpansion::add(const Partition& lambda, const QtPolynomial& p) {
    if (lambda.size() != degree_)
        throw std::invalid_argument("partition size must equal the degree");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QtPolynomial SchurExpansion::coefficient(const Partition& lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? QtPolynomial{} : it->second;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
    if (degree_ != other.degree_)
        throw std::invalid_argument("cannot add expansions of different degrees");
    for (const auto& [lambda, p] : other.terms_) add(lambda, p);
    return *this;
}

SchurExpansion SchurExpansion::swap_qt() const {
    SchurExpansion out(degree_);
    for (const auto& [lambda, p] : terms_) out.add(lambda, p.swap_qt());
    return out;
}

bool SchurExpansion::all_coefficients_nonnegative() const {
    for (const auto& [lambda, p] : terms_)
        if (!p.all_coefficients_nonnegative()) return false;
    return true;
}

std::string SchurExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, p] : terms_) {
        if (!first) out += " + ";
        out += "(" + p.to_string() + ")*s[" + lambda.to_string() + "]";
        first = false;
    }
    return out;
}

FExpansion schur_to_fundamental(const Partition& lambda) {
    if (lambda.size() < 1 || lambda.size() > kMaxSymfuncDegree)
        throw std::invalid_argument("schur_to_fundamental supports 1 <= |lambda| <= " +
                                    std::to_string(kMaxSymfuncDegree));
    FExpansion out(lambda.size());
    for (const StandardYoungTableau& t : syt_enumerate(lambda))
        out.add_term(descent_set(t), 0, 0, 1);
    return out;
}

std::vector<std::vector<std::int64_t>> descent_matrix(int n) {
    if (n < 1 || n > kMaxSymfuncDegree)
        throw std::invalid_argument("descent_matrix supports 1 <= n <= " +
                                    std::to_string(kMaxSymfuncDegree));
    const std::vector<Partition> partitions = partitions_of(n);
    const std::size_t rows = std::size_t{1} << (n - 1);
    std::vector<std::vector<std::int64_t>> m(rows,
                                             std::vector<std::int64_t>(partitions.size(), 0));
    for (std::size_t j = 0; j < partitions.size(); ++j)
        for (const StandardYoungTableau& t : syt_enumerate(partitions[j]))
            ++m[descent_set(t)][j];
    return m;
}

SchurExpansion fundamental_to_schur(const FExpansion& f) {
    const int n = f.degree();
    if (n < 1 || n > kMaxSymfuncDegree)
        throw std::invalid_argument("fundamental_to_schur supports 1 <= degree <= " +
                                    std::to_string(kMaxSymfuncDegree));

    // One exact solve against the descent matrix covers every bidegree slice:
    // slice k has right-hand side column k.
    std::vector<QtPolynomial::Exponents> bidegrees;
    {
        std::map<std::pair<int, int>, std::size_t> seen;
        for (const auto& [s, p] : f.terms())
            for (const QtTerm& term : p.terms())
                seen.emplace(std::pair{term.q_exp, term.t_exp}, seen.size());
        bidegrees.resize(seen.size());
        for (const auto& [exps, k] : seen) bidegrees[k] = {exps.first, exps.second};
    }

    const std::vector<std::vector<std::int64_t>> m = descent_matrix(n);
    const std::size_t rows = m.size();
    std::vector<std::vector<std::int64_t>> rhs(rows,
                                               std::vector<std::int64_t>(bidegrees.size(), 0));
    for (const auto& [s, p] : f.terms())
        for (std::size_t k = 0; k < bidegrees.size(); ++k)
            rhs[s][k] = p.coefficient(bidegrees[k].q, bidegrees[k].t);

    const ExactSolveResult solved = solve_exact(m, rhs);
    if (solved.status == SolveStatus::Underdetermined)
        throw std::logic_error("descent matrix lost column rank");

    const std::vector<Partition> partitions = partitions_of(n);
    SchurExpansion out(n);
    for (std::size_t k = 0; k < bidegrees.size(); ++k) {
        if (!solved.consistent[k])
            throw NotSymmetricError("input is not symmetric at bidegree q^" +
                                    std::to_string(bidegrees[k].q) + " t^" +
                                    std::to_string(bidegrees[k].t));
        for (std::size_t j = 0; j < partitions.size(); ++j) {
            const Rational& value = solved.solutions[k][j];
            if (value.is_zero()) continue;
            if (!value.is_integer())
                throw NonIntegralError("bidegree q^" + std::to_string(bidegrees[k].q) +
                                       " t^" + std::to_string(bidegrees[k].t) +
                                       " solves only over the rationals");
            out.add(partitions[j],
                    QtPolynomial::monomial(bidegrees[k].q, bidegrees[k].t, value.num()));
        }
    }
    return out;
}

int fundamental_monomial_coefficient(const FundamentalIndex& index,
                                     const Composition& gamma) {
    const int n = index.degree;
    if (n < 1) throw std::invalid_argument("degree must be positive");
    if (!subset_within(index.subset, n))
        throw std::invalid_argument("subset not contained in [n-1]");
    if (gamma.size() != n)
        throw std::invalid_argument("composition size must equal the degree");
    // The weakly increasing tuple of content gamma is unique; strict rises sit
    // exactly at the partial sums of gamma.
    SubsetMask breakpoints = 0;
    int cumulative = 0;
    for (std::size_t i = 0; i + 1 < gamma.parts().size(); ++i) {
        cumulative += gamma.parts()[i];
        breakpoints |= SubsetMask{1} << (cumulative - 1);
    }
    return (index.subset & ~breakpoints) == 0 ? 1 : 0;
}

QtPolynomial expansion_monomial_coefficient(const FExpansion& f,
                                            const Composition& gamma) {
    if (gamma.size() != f.degree())
        throw std::invalid_argument("composition size must equal the degree");
    QtPolynomial out;
    for (const auto& [s, p] : f.terms())
        if (fundamental_monomial_coefficient({f.degree(), s}, gamma)) out += p;
    return out;
}

std::int64_t dimension_specialization(const FExpansion& f) {
    std::int64_t total = 0;
    for (const auto& [s, p] : f.terms()) total = checked_add(total, p.evaluate(1, 1));
    return total;
}

Partition e_n_index(int n) { return Partition::single_column(n); }

}  // namespace shuffle
