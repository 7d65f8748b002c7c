#ifndef SIEGELQ_POLYRING_HPP
#define SIEGELQ_POLYRING_HPP

#include <map>
#include <string>
#include <vector>

#include "siegelq/rational.hpp"

namespace siegelq {

/// Sparse polynomial over Q in the symmetric variables r_ij (1 <= i <= j <= g),
/// where r_ij is the (i,j) entry of R = -(1/4pi) Y^{-1}.  Variables are flattened
/// to indices 0..g(g+1)/2-1 in row-major (i,j) order with i <= j.
class SparsePolynomial {
public:
    using Exponents = std::vector<unsigned>;

    explicit SparsePolynomial(unsigned genus);
    SparsePolynomial(unsigned genus, const Rational& constant);

    static unsigned num_vars(unsigned genus) { return genus * (genus + 1) / 2; }
    static unsigned var_index(unsigned genus, unsigned i, unsigned j);
    /// Inverse of var_index: the (i,j) pair (0-based, i <= j) of a flat index.
    static std::pair<unsigned, unsigned> var_pair(unsigned genus, unsigned v);

    /// The monomial r_ij (0-based indices, any order).
    static SparsePolynomial variable(unsigned genus, unsigned i, unsigned j);

    unsigned genus() const { return genus_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    /// Total degree of the highest term; -1 for the zero polynomial.
    int degree() const;

    Rational constant_term() const;
    /// Evaluate at r = 0 (drops every non-constant term).
    Rational eval_at_zero() const { return constant_term(); }

    void add_term(const Exponents& e, const Rational& c);

    SparsePolynomial operator-() const;
    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const Rational& c) const;
    bool operator==(const SparsePolynomial& o) const {
        return genus_ == o.genus_ && terms_ == o.terms_;
    }
    bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }
    bool operator<(const SparsePolynomial& o) const {
        if (genus_ != o.genus_) return genus_ < o.genus_;
        return terms_ < o.terms_;
    }

    /// Formal partial derivative with respect to variable var (flat index).
    SparsePolynomial derive(unsigned var) const;

    /// Simultaneous substitution; assignment must cover every variable that
    /// occurs with nonzero exponent.  Values may have the same genus.
    SparsePolynomial substitute(const std::map<unsigned, SparsePolynomial>& assignment) const;

    std::string str() const;

private:
    void check_compat(const SparsePolynomial& o) const;

    unsigned genus_;
    std::map<Exponents, Rational> terms_;  // no zero coefficients stored
};

inline SparsePolynomial operator*(const Rational& c, const SparsePolynomial& p) { return p * c; }

}  // namespace siegelq

#endif
