#ifndef SIEGELQ_EISENSTEIN_HPP
#define SIEGELQ_EISENSTEIN_HPP

#include <string>

#include "siegelq/nearcalc.hpp"
#include "siegelq/qseries.hpp"

namespace siegelq {

/// Exact Bernoulli number B_n (convention B_1 = -1/2), memoized.
Rational bernoulli(unsigned n);

/// sigma_k(n) = sum of k-th powers of the divisors of n.
Integer divisor_sum(unsigned long n, unsigned k);

/// Normalized genus-1 level-1 Eisenstein series
///   E_h = 1 - (2h/B_h) sum_{n>=1} sigma_{h-1}(n) q^n
/// up to q^prec.  h must be even and >= 4.
QExpansion<Rational> eisenstein_q(long h, long prec);

/// The quasi-modular E_2 = 1 - 24 sum sigma_1(n) q^n (ingredient of E_2*).
QExpansion<Rational> eisenstein_e2(long prec);

/// E_2* = E_2 + 12 r_11, the weight-2 nearly holomorphic Eisenstein series.
PolyQExpansion eisenstein_e2_star(long prec);

/// pi^{gs} E_h(Z, s) as a nearly holomorphic expansion: the delta ladder
/// applied to E_{h+2s} with the eps_1 prefactor (genus 1, trivial character).
PolyQExpansion nearly_eisenstein(long h, long s, long prec);

/// Read a higher-genus coefficient table in the JSON interchange format
/// (rational ring) with a {source, normalization, citation} header, and
/// validate the support invariants.
QExpansion<Rational> load_coefficient_table(const std::string& path);

}  // namespace siegelq

#endif
