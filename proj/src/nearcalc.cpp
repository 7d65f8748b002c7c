#include "siegelq/nearcalc.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

namespace siegelq {

PolyQExpansion poly_qexpansion(unsigned genus, unsigned level, long trace_bound,
                               std::optional<Rational> weight) {
    return PolyQExpansion(genus, level, trace_bound, std::move(weight),
                          SparsePolynomial(genus));
}

PolyQExpansion lift_to_poly(const QExpansion<Rational>& f) {
    PolyQExpansion out = poly_qexpansion(f.genus(), f.level(), f.trace_bound(), f.weight());
    for (const auto& [T, c] : f.terms())
        out.set_coefficient(T, SparsePolynomial(f.genus(), c));
    return out;
}

bool is_holomorphic(const PolyQExpansion& f) {
    for (const auto& [T, c] : f.terms())
        if (!c.is_constant()) return false;
    return true;
}

namespace {

SparsePolynomial r_var(unsigned g, unsigned i, unsigned j) {
    return SparsePolynomial::variable(g, i, j);
}

// -(R E_ab R)_kl as a polynomial in the r variables.
SparsePolynomial deriv_rule(unsigned g, unsigned k, unsigned l, unsigned a, unsigned b) {
    if (a == b) return -(r_var(g, k, a) * r_var(g, a, l));
    return -(r_var(g, k, a) * r_var(g, b, l) + r_var(g, k, b) * r_var(g, a, l));
}

// Derivation on one coefficient polynomial: chain rule over the r variables.
SparsePolynomial derive_coeff(const SparsePolynomial& p, unsigned a, unsigned b) {
    const unsigned g = p.genus();
    SparsePolynomial out(g);
    for (unsigned v = 0; v < SparsePolynomial::num_vars(g); ++v) {
        SparsePolynomial dp = p.derive(v);
        if (dp.is_zero()) continue;
        auto [k, l] = SparsePolynomial::var_pair(g, v);
        out = out + dp * deriv_rule(g, k, l, a, b);
    }
    return out;
}

}  // namespace

PolyQExpansion partial_z(const PolyQExpansion& f, unsigned a, unsigned b) {
    const unsigned g = f.genus();
    if (a >= g || b >= g)
        throw std::out_of_range("partial_z: index out of range");
    if (a > b) std::swap(a, b);
    PolyQExpansion out = poly_qexpansion(g, f.level(), f.trace_bound(), f.weight());
    for (const auto& [T, c] : f.terms()) {
        // (2 - delta_ab) t_ab / N
        Rational tfac = a == b ? frac(T.doubled(a, a), 2) : Rational(T.doubled(a, b));
        tfac /= Rational(static_cast<long>(f.level()));
        SparsePolynomial nc = c * tfac + derive_coeff(c, a, b);
        out.add_coefficient(T, nc);
    }
    return out;
}

SymValuedExpansion shimura_D(const PolyQExpansion& f, long h) {
    const unsigned g = f.genus();
    const unsigned n = SymPoly<SparsePolynomial>::slot_count(g);
    SymPoly<SparsePolynomial> zero(g, 1, SparsePolynomial(g));
    SymValuedExpansion out(g, f.level(), f.trace_bound(), f.weight(), zero);
    for (unsigned a = 0; a < g; ++a)
        for (unsigned b = a; b < g; ++b) {
            const Rational two_minus_delta(a == b ? 1 : 2);
            PolyQExpansion comp = partial_z(f, a, b);
            for (const auto& [T, c] : f.terms())
                comp.add_coefficient(T, r_var(g, a, b) * c * (two_minus_delta * Rational(h)));
            std::vector<unsigned> slot(n, 0);
            slot[SparsePolynomial::var_index(g, a, b)] = 1;
            for (const auto& [T, c] : comp.terms()) {
                SymPoly<SparsePolynomial> v(g, 1, SparsePolynomial(g));
                v.add_term(slot, c);
                out.add_coefficient(T, v);
            }
        }
    return out;
}

namespace {

PolyQExpansion delta_entry(const PolyQExpansion& f, unsigned i, unsigned j,
                           const Rational& lambda) {
    // ((1 + delta_ij)/2) partial_z + lambda r_ij
    const Rational half(i == j ? Rational(1) : Rational(1, 2));
    PolyQExpansion out = partial_z(f, i, j);
    out = qexp_scale(out, half);
    const unsigned g = f.genus();
    for (const auto& [T, c] : f.terms())
        out.add_coefficient(T, r_var(g, i, j) * c * lambda);
    return out;
}

}  // namespace

PolyQExpansion maass_delta(const PolyQExpansion& f, const Rational& h,
                           bool reverse_composition) {
    const unsigned g = f.genus();
    const Rational lambda = h - frac(static_cast<long>(g) - 1, 2);
    PolyQExpansion acc = poly_qexpansion(g, f.level(), f.trace_bound());
    std::vector<unsigned> perm(g);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        int inv = 0;
        for (unsigned i = 0; i < g; ++i)
            for (unsigned j = i + 1; j < g; ++j)
                if (perm[i] > perm[j]) ++inv;
        PolyQExpansion term = f;
        if (!reverse_composition) {
            for (unsigned i = g; i-- > 0;) term = delta_entry(term, i, perm[i], lambda);
        } else {
            for (unsigned i = 0; i < g; ++i) term = delta_entry(term, i, perm[i], lambda);
        }
        acc = qexp_add(acc, term, Rational(1), Rational(inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (f.weight()) acc.set_weight(*f.weight() + 2);
    return acc;
}

Rational epsilon_g(unsigned genus, const Rational& h) {
    Rational e(1);
    for (unsigned j = 0; j < genus; ++j) e *= h - frac(j, 2);
    return e;
}

PolyQExpansion delta_ladder(const PolyQExpansion& f, long h, long s) {
    if (s > 0) throw std::invalid_argument("delta_ladder: s must be nonpositive");
    if (!is_holomorphic(f))
        throw std::invalid_argument("delta_ladder: input must be holomorphic (r-degree 0)");
    const unsigned g = f.genus();
    if (s < 0 && h + 2 * s <= static_cast<long>(g) + 1)
        std::cerr << "siegelq: warning: delta_ladder starting weight " << (h + 2 * s)
                  << " <= g+1; Eisenstein convergence not guaranteed\n";
    Rational prefactor(1);
    for (long i = 0; i < -s; ++i) {
        const Rational eps = epsilon_g(g, Rational(h + 2 * s + 2 * i));
        if (eps == 0)
            throw std::domain_error("delta_ladder: eps_g vanishes at ladder weight " +
                                    std::to_string(h + 2 * s + 2 * i));
        prefactor /= eps;
    }
    PolyQExpansion out = f;
    out.set_weight(Rational(h + 2 * s));
    for (long w = h + 2 * s; w <= h - 2; w += 2) out = maass_delta(out, Rational(w));
    return qexp_scale(out, prefactor);
}

}  // namespace siegelq
