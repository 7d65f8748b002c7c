#ifndef SIEGELQ_NEARCALC_HPP
#define SIEGELQ_NEARCALC_HPP

#include "siegelq/qseries.hpp"
#include "siegelq/symvalued.hpp"

namespace siegelq {

using PolyQExpansion = QExpansion<SparsePolynomial>;
using SymValuedExpansion = QExpansion<SymPoly<SparsePolynomial>>;

PolyQExpansion poly_qexpansion(unsigned genus, unsigned level, long trace_bound,
                               std::optional<Rational> weight = std::nullopt);

/// Lift a rational expansion into the nearly holomorphic (r-polynomial) ring.
PolyQExpansion lift_to_poly(const QExpansion<Rational>& f);

/// Whether every coefficient is r-free (the expansion is holomorphic).
bool is_holomorphic(const PolyQExpansion& f);

/// The normalized derivation d/d(2 pi sqrt(-1) z_ab) in conjugated polynomial
/// form: q^{T/N} picks up (2 - delta_ab) t_ab / N, and each variable r_kl
/// maps to -(R E_ab R)_kl, i.e. -(r_ka r_bl + r_kb r_al) for a != b and
/// -r_ka r_al for a = b.  Indices are 0-based, any order.
PolyQExpansion partial_z(const PolyQExpansion& f, unsigned a, unsigned b);

/// Shimura's operator D for scalar weight det^h, conjugated by det(Z-Zbar)^h:
/// slot (a,b) carries Delta_ab = partial_z(.,a,b) + h (2 - delta_ab) r_ab.
SymValuedExpansion shimura_D(const PolyQExpansion& f, long h);

/// Maass-Shimura weight-raising operator delta_h = det(M) with commuting
/// entries M_ij = ((1 + delta_ij)/2) partial_z(.,i,j) + (h - (g-1)/2) r_ij.
/// reverse_composition flips the order in which each permutation's entry
/// product is applied; the results must agree (the entries commute).
PolyQExpansion maass_delta(const PolyQExpansion& f, const Rational& h,
                           bool reverse_composition = false);

/// The ladder constant eps_g(h) = h (h - 1/2) ... (h - (g-1)/2).
Rational epsilon_g(unsigned genus, const Rational& h);

/// prod_{i=0}^{-s-1} eps_g(h+2s+2i)^{-1} . (delta_{h-2} o ... o delta_{h+2s})(f)
/// for a holomorphic f of weight h+2s and a nonpositive integer s.
PolyQExpansion delta_ladder(const PolyQExpansion& f, long h, long s);

}  // namespace siegelq

#endif
