#ifndef SIEGELQ_PADIC_HPP
#define SIEGELQ_PADIC_HPP

#include <optional>

#include "siegelq/nearcalc.hpp"
#include "siegelq/qseries.hpp"
#include "siegelq/symvalued.hpp"

namespace siegelq {

/// Residue class modulo p^m, canonical representative in [0, p^m).
class ResidueCoeff {
public:
    ResidueCoeff(Integer p, unsigned m);
    ResidueCoeff(Integer p, unsigned m, const Integer& value);

    /// Reduction of a rational with denominator prime to p.
    static ResidueCoeff from_rational(const Integer& p, unsigned m, const Rational& r);

    const Integer& prime() const { return p_; }
    unsigned precision() const { return m_; }
    const Integer& modulus() const { return modulus_; }
    const Integer& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    ResidueCoeff operator+(const ResidueCoeff& o) const;
    ResidueCoeff operator*(const ResidueCoeff& o) const;
    bool operator==(const ResidueCoeff& o) const {
        return p_ == o.p_ && m_ == o.m_ && value_ == o.value_;
    }
    bool operator!=(const ResidueCoeff& o) const { return !(*this == o); }

private:
    Integer p_;
    unsigned m_;
    Integer modulus_;
    Integer value_;
};

inline bool ring_is_zero(const ResidueCoeff& c) { return c.is_zero(); }
inline bool ring_compatible(const ResidueCoeff& a, const ResidueCoeff& b) {
    return a.prime() == b.prime() && a.precision() == b.precision();
}
ResidueCoeff ring_scale(const ResidueCoeff& c, const Rational& s);

using PAdicQExpansion = QExpansion<ResidueCoeff>;

/// Coefficientwise reduction mod p^m; requires p not dividing the level and
/// every coefficient p-integral (throws with a witness description otherwise).
PAdicQExpansion reduce_mod(const QExpansion<Rational>& f, const Integer& p, unsigned m);

/// a(T) -> a(T) * (tr(T u)/N)^e in S_e(Sym^2); the Fourier symbol of the
/// iterated p-adic derivation sum q_ij d/dq_ij.
template <class C>
QExpansion<SymPoly<C>> dp_operator(const QExpansion<C>& f, unsigned e);

/// The theta operator: a(T) -> a(T) * det(T/N).
template <class C>
QExpansion<C> theta_op(const QExpansion<C>& f);

struct CongruenceResult {
    bool equal = true;
    std::optional<HalfIntegralMatrix> witness_T;
};

/// Whether f = g as p-adic expansions mod p^m.
CongruenceResult congruence_check(const QExpansion<Rational>& f,
                                  const QExpansion<Rational>& g,
                                  const Integer& p, unsigned m);

/// k1 = k2 mod (p-1) p^{m-1}, the scalar weight-space congruence.
bool weight_congruent(long k1, long k2, const Integer& p, unsigned m);

/// Evaluation r -> 0: the q-expansion-level p-adic avatar of a nearly
/// holomorphic form.
QExpansion<Rational> padic_realize(const PolyQExpansion& f);

template <class C>
QExpansion<SymPoly<C>> dp_operator(const QExpansion<C>& f, unsigned e) {
    if (e == 0) throw std::invalid_argument("dp_operator: e must be positive");
    const unsigned g = f.genus();
    SymPoly<C> zero(g, e, f.zero_coeff());
    QExpansion<SymPoly<C>> out(g, f.level(), f.trace_bound(), f.weight(), zero);
    for (const auto& [T, a] : f.terms()) {
        SymPoly<Rational> L = trace_form(T, f.level());
        SymPoly<Rational> Le(g, 0, Rational(0));
        Le.add_term(std::vector<unsigned>(SymPoly<Rational>::slot_count(g), 0), Rational(1));
        for (unsigned k = 0; k < e; ++k) Le = Le * L;
        SymPoly<C> v(g, e, f.zero_coeff());
        for (const auto& [alpha, c] : Le.terms()) v.add_term(alpha, ring_scale(a, c));
        out.add_coefficient(T, v);
    }
    return out;
}

template <class C>
QExpansion<C> theta_op(const QExpansion<C>& f) {
    QExpansion<C> out(f.genus(), f.level(), f.trace_bound(), f.weight(), f.zero_coeff());
    const Rational level_pow =
        pow_rational(Rational(static_cast<long>(f.level())), f.genus());
    for (const auto& [T, a] : f.terms()) {
        const Rational d = det_rational(T) / level_pow;
        if (d == 0) continue;
        out.add_coefficient(T, ring_scale(a, d));
    }
    return out;
}

}  // namespace siegelq

#endif
