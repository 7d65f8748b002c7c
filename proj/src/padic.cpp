#include "siegelq/padic.hpp"

#include <stdexcept>

namespace siegelq {

ResidueCoeff::ResidueCoeff(Integer p, unsigned m)
    : ResidueCoeff(std::move(p), m, Integer(0)) {}

ResidueCoeff::ResidueCoeff(Integer p, unsigned m, const Integer& value)
    : p_(std::move(p)), m_(m) {
    if (p_ < 2) throw std::invalid_argument("ResidueCoeff: p must be >= 2");
    if (m_ == 0) throw std::invalid_argument("ResidueCoeff: m must be >= 1");
    modulus_ = pow_integer(p_, m_);
    mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

ResidueCoeff ResidueCoeff::from_rational(const Integer& p, unsigned m, const Rational& r) {
    ResidueCoeff out(p, m);
    if (!denominator_coprime_to(r, p))
        throw std::domain_error("ResidueCoeff: coefficient " + r.get_str() +
                                " is not p-integral at p = " + p.get_str());
    Integer den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), r.get_den().get_mpz_t(),
                   out.modulus_.get_mpz_t()) == 0)
        throw std::domain_error("ResidueCoeff: denominator not invertible mod p^m");
    Integer v = r.get_num() * den_inv;
    mpz_mod(out.value_.get_mpz_t(), v.get_mpz_t(), out.modulus_.get_mpz_t());
    return out;
}

ResidueCoeff ResidueCoeff::operator+(const ResidueCoeff& o) const {
    if (!ring_compatible(*this, o))
        throw std::invalid_argument("ResidueCoeff: modulus mismatch");
    return ResidueCoeff(p_, m_, value_ + o.value_);
}

ResidueCoeff ResidueCoeff::operator*(const ResidueCoeff& o) const {
    if (!ring_compatible(*this, o))
        throw std::invalid_argument("ResidueCoeff: modulus mismatch");
    return ResidueCoeff(p_, m_, value_ * o.value_);
}

ResidueCoeff ring_scale(const ResidueCoeff& c, const Rational& s) {
    return c * ResidueCoeff::from_rational(c.prime(), c.precision(), s);
}

PAdicQExpansion reduce_mod(const QExpansion<Rational>& f, const Integer& p, unsigned m) {
    if (p < 2) throw std::domain_error("reduce_mod: invalid prime");
    Integer level(static_cast<long>(f.level()));
    if (mpz_divisible_p(level.get_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("reduce_mod: p divides the level");
    GateResult gate = integrality_gate(f, p);
    if (!gate.ok)
        throw std::domain_error("reduce_mod: coefficient " + gate.witness_coeff.get_str() +
                                " is not p-integral at p = " + p.get_str());
    PAdicQExpansion out(f.genus(), f.level(), f.trace_bound(), f.weight(),
                        ResidueCoeff(p, m));
    for (const auto& [T, c] : f.terms())
        out.add_coefficient(T, ResidueCoeff::from_rational(p, m, c));
    return out;
}

CongruenceResult congruence_check(const QExpansion<Rational>& f,
                                  const QExpansion<Rational>& g,
                                  const Integer& p, unsigned m) {
    check_same_series(f, g);
    if (f.trace_bound() != g.trace_bound())
        throw std::invalid_argument("congruence_check: trace bounds differ");
    PAdicQExpansion fr = reduce_mod(f, p, m);
    PAdicQExpansion gr = reduce_mod(g, p, m);
    // walk the union of supports in canonical order
    auto fi = fr.terms().begin();
    auto gi = gr.terms().begin();
    while (fi != fr.terms().end() || gi != gr.terms().end()) {
        if (gi == gr.terms().end() || (fi != fr.terms().end() && fi->first < gi->first)) {
            return {false, fi->first};
        }
        if (fi == fr.terms().end() || gi->first < fi->first) {
            return {false, gi->first};
        }
        if (fi->second != gi->second) return {false, fi->first};
        ++fi;
        ++gi;
    }
    return {};
}

bool weight_congruent(long k1, long k2, const Integer& p, unsigned m) {
    Integer mod = (p - 1) * pow_integer(p, m - 1);
    Integer diff(k1 - k2);
    return mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t());
}

QExpansion<Rational> padic_realize(const PolyQExpansion& f) {
    QExpansion<Rational> out(f.genus(), f.level(), f.trace_bound(), f.weight(), Rational(0));
    for (const auto& [T, c] : f.terms()) out.add_coefficient(T, c.eval_at_zero());
    return out;
}

}  // namespace siegelq
