#ifndef SIEGELQ_RATIONAL_HPP
#define SIEGELQ_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace siegelq {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("siegelq: malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// num/den in lowest terms.  mpq_class(num, den) does not canonicalize on its
/// own, and GMP arithmetic requires canonical operands.
inline Rational frac(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// True iff the denominator of r (in lowest terms) is coprime to p.
inline bool denominator_coprime_to(const Rational& r, const Integer& p) {
    return !mpz_divisible_p(r.get_den().get_mpz_t(), p.get_mpz_t());
}

inline Rational pow_rational(const Rational& base, unsigned e) {
    Rational acc(1);
    for (unsigned i = 0; i < e; ++i) acc *= base;
    return acc;
}

inline Integer pow_integer(const Integer& base, unsigned e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace siegelq

#endif
