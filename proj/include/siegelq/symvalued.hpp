#ifndef SIEGELQ_SYMVALUED_HPP
#define SIEGELQ_SYMVALUED_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "siegelq/polyring.hpp"
#include "siegelq/qseries.hpp"
#include "siegelq/rational.hpp"

namespace siegelq {

/// Homogeneous degree-e polynomial map on Sym^2(R^g) with values in a
/// coefficient ring C: an element of S_e(Sym^2).  Coordinates are the matrix
/// entries u_ij (i <= j), flattened like SparsePolynomial variables; a term
/// maps a slot-exponent vector (summing to e) to a C value.
template <class C>
class SymPoly {
public:
    using Exponents = std::vector<unsigned>;

    SymPoly(unsigned genus, unsigned degree, C zero)
        : genus_(genus), degree_(degree), zero_(std::move(zero)) {}

    static unsigned slot_count(unsigned genus) { return genus * (genus + 1) / 2; }

    unsigned genus() const { return genus_; }
    unsigned degree() const { return degree_; }
    const C& zero_coeff() const { return zero_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, C>& terms() const { return terms_; }

    void add_term(const Exponents& e, const C& c) {
        if (e.size() != slot_count(genus_))
            throw std::invalid_argument("SymPoly: slot-exponent vector has wrong length");
        unsigned total = 0;
        for (unsigned x : e) total += x;
        if (total != degree_)
            throw std::invalid_argument("SymPoly: slot exponents do not sum to the degree");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!ring_is_zero(c)) terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    const C& term_at(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_ : it->second;
    }

    SymPoly operator+(const SymPoly& o) const {
        if (genus_ != o.genus_ || degree_ != o.degree_)
            throw std::invalid_argument("SymPoly: shape mismatch in addition");
        SymPoly out(*this);
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    SymPoly operator*(const SymPoly& o) const {
        if (genus_ != o.genus_)
            throw std::invalid_argument("SymPoly: genus mismatch in product");
        SymPoly out(genus_, degree_ + o.degree_, zero_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(e1);
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
                out.add_term(e, c1 * c2);
            }
        return out;
    }

    SymPoly scaled(const Rational& s) const {
        SymPoly out(genus_, degree_, zero_);
        for (const auto& [e, c] : terms_) out.add_term(e, ring_scale(c, s));
        return out;
    }

    bool operator==(const SymPoly& o) const {
        return genus_ == o.genus_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

private:
    unsigned genus_;
    unsigned degree_;
    C zero_;
    std::map<Exponents, C> terms_;
};

template <class C>
bool ring_is_zero(const SymPoly<C>& c) { return c.is_zero(); }
template <class C>
bool ring_compatible(const SymPoly<C>& a, const SymPoly<C>& b) {
    return a.genus() == b.genus() && a.degree() == b.degree() &&
           ring_compatible(a.zero_coeff(), b.zero_coeff());
}
template <class C>
SymPoly<C> ring_scale(const SymPoly<C>& c, const Rational& s) { return c.scaled(s); }

/// Basis of Sym^2 used throughout: B_ii = E_ii and B_ij = E_ij + E_ji (i < j).
/// The trace pairing has Gram matrix diag(..., tr(B_s B_s) ...) = 1 on
/// diagonal slots and 2 on off-diagonal slots; duals are B_ii and B_ij/2.
inline Rational slot_dual_factor(unsigned genus, unsigned slot) {
    auto [i, j] = SparsePolynomial::var_pair(genus, slot);
    return i == j ? Rational(1) : Rational(1, 2);
}

/// Exact contraction of a doubly S_e-valued element given as a pair of slot
/// polynomials A (C-valued) and B (rational), via polarization and the dual
/// basis for the trace pairing:
///   theta(A, B) = sum_alpha A_alpha * B_alpha * (alpha!/e!) * prod_s d_s^alpha_s.
template <class C>
C contract(const SymPoly<C>& A, const SymPoly<Rational>& B) {
    if (A.genus() != B.genus())
        throw std::invalid_argument("contract: genus mismatch");
    if (A.degree() != B.degree())
        throw std::invalid_argument("contract: slot-arity mismatch");
    const unsigned e = A.degree();
    C acc = A.zero_coeff();
    const Rational efact(factorial(e));
    for (const auto& [alpha, a] : A.terms()) {
        const Rational& b = B.term_at(alpha);
        if (b == 0) continue;
        Rational w = b / efact;
        for (unsigned s = 0; s < alpha.size(); ++s) {
            if (alpha[s] == 0) continue;
            w *= Rational(factorial(alpha[s]));
            w *= pow_rational(slot_dual_factor(A.genus(), s), alpha[s]);
        }
        acc = acc + ring_scale(a, w);
    }
    return acc;
}

/// Rewrite B in the basis dual to the monomials u^alpha, so that
/// contract(A, dual_expand(B)) = sum_alpha A_alpha B_alpha (plain coefficient
/// pairing); contract . dual_expand is the identity reconstruction.
SymPoly<Rational> dual_expand(const SymPoly<Rational>& B);

/// det(u) as a degree-g element of S_g(Sym^2) (the polarization polynomial of
/// the theta operator).
SymPoly<Rational> det_sym_poly(unsigned genus);

/// The linear form u -> tr(T u)/N, the degree-1 symbol of q_ij d/dq_ij.
SymPoly<Rational> trace_form(const HalfIntegralMatrix& T, unsigned level);

}  // namespace siegelq

#endif
