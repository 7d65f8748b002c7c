#ifndef SIEGELQ_DERHAM_HPP
#define SIEGELQ_DERHAM_HPP

#include <map>
#include <utility>
#include <vector>

#include "siegelq/nearcalc.hpp"
#include "siegelq/qseries.hpp"

namespace siegelq {

/// Element of the m-fold tensor power of the 2g-dimensional omega/eta space
/// with r-polynomial coefficients.  Tensor indices run over 0..2g-1: values
/// 0..g-1 mean omega_{i+1}, values g..2g-1 mean eta_{i-g+1}.
class DeRhamCoefficient {
public:
    using Index = std::vector<unsigned>;

    DeRhamCoefficient(unsigned genus, unsigned tensor_degree)
        : genus_(genus), degree_(tensor_degree), zero_(genus) {}

    unsigned genus() const { return genus_; }
    unsigned tensor_degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Index, SparsePolynomial>& terms() const { return terms_; }

    void add_term(const Index& idx, const SparsePolynomial& c);
    void add_term(const Index& idx, const Rational& c) {
        add_term(idx, SparsePolynomial(genus_, c));
    }
    const SparsePolynomial& term_at(const Index& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? zero_ : it->second;
    }

    /// True if no index contains an eta direction.
    bool omega_only() const;

    DeRhamCoefficient operator+(const DeRhamCoefficient& o) const;
    DeRhamCoefficient scaled(const Rational& s) const;
    bool operator==(const DeRhamCoefficient& o) const {
        return genus_ == o.genus_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const DeRhamCoefficient& o) const { return !(*this == o); }

private:
    unsigned genus_;
    unsigned degree_;
    SparsePolynomial zero_;
    std::map<Index, SparsePolynomial> terms_;
};

inline bool ring_is_zero(const DeRhamCoefficient& c) { return c.is_zero(); }
inline bool ring_compatible(const DeRhamCoefficient& a, const DeRhamCoefficient& b) {
    return a.genus() == b.genus() && a.tensor_degree() == b.tensor_degree();
}
inline DeRhamCoefficient ring_scale(const DeRhamCoefficient& c, const Rational& s) {
    return c.scaled(s);
}

using DeRhamQExpansion = QExpansion<DeRhamCoefficient>;

DeRhamQExpansion derham_qexpansion(unsigned genus, unsigned level, long trace_bound,
                                   unsigned tensor_degree,
                                   std::optional<Rational> weight = std::nullopt);

/// The Hodge realization: omega_k fixed, eta_i -> sum_k r_ik omega_k.  The
/// output carries only omega-tensor indices, with r-polynomial coefficients.
DeRhamQExpansion phi_realize(const DeRhamQExpansion& F);

/// The unit-root realization: every eta-bearing term is dropped and the
/// surviving coefficients are evaluated at r = 0.  Equals (r -> 0) composed
/// with phi_realize.
DeRhamQExpansion unit_root_realize(const DeRhamQExpansion& F);

/// Evaluate every coefficient polynomial at r = 0 (keeps the index structure).
DeRhamQExpansion evaluate_at_r_zero(const DeRhamQExpansion& F);

/// Gauss-Manin rule at q-expansion level, slot by Sym^2 pair (i <= j):
/// the q-monomial contributes (2 - delta_ij) t_ij / N, each omega index
/// contributes an eta at the matching slot, eta indices contribute nothing.
std::map<std::pair<unsigned, unsigned>, DeRhamQExpansion>
gauss_manin(const DeRhamQExpansion& F);

/// Exact column rank of the phi substitution matrix on the (2g)^m tensor
/// monomial basis; full rank (2g)^m witnesses injectivity at this level.
std::size_t phi_substitution_rank(unsigned genus, unsigned tensor_degree);

}  // namespace siegelq

#endif
