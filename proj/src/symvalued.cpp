#include "siegelq/symvalued.hpp"

#include <algorithm>
#include <numeric>

namespace siegelq {

SymPoly<Rational> dual_expand(const SymPoly<Rational>& B) {
    const unsigned e = B.degree();
    SymPoly<Rational> out(B.genus(), e, Rational(0));
    const Rational efact(factorial(e));
    for (const auto& [alpha, b] : B.terms()) {
        Rational w = efact;
        for (unsigned s = 0; s < alpha.size(); ++s) {
            if (alpha[s] == 0) continue;
            w /= Rational(factorial(alpha[s]));
            w /= pow_rational(slot_dual_factor(B.genus(), s), alpha[s]);
        }
        out.add_term(alpha, b * w);
    }
    return out;
}

SymPoly<Rational> det_sym_poly(unsigned genus) {
    const unsigned n = SymPoly<Rational>::slot_count(genus);
    SymPoly<Rational> out(genus, genus, Rational(0));
    std::vector<unsigned> perm(genus);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        // sign from inversion count
        int inv = 0;
        for (unsigned i = 0; i < genus; ++i)
            for (unsigned j = i + 1; j < genus; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<unsigned> alpha(n, 0);
        for (unsigned i = 0; i < genus; ++i)
            alpha[SparsePolynomial::var_index(genus, i, perm[i])] += 1;
        out.add_term(alpha, Rational(inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SymPoly<Rational> trace_form(const HalfIntegralMatrix& T, unsigned level) {
    const unsigned g = T.genus();
    const unsigned n = SymPoly<Rational>::slot_count(g);
    SymPoly<Rational> out(g, 1, Rational(0));
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i; j < g; ++j) {
            // (2 - delta_ij) t_ij = S_ij for i < j, S_ii / 2 for i = j
            Rational c = i == j ? frac(T.doubled(i, i), 2) : Rational(T.doubled(i, j));
            c /= Rational(static_cast<long>(level));
            if (c == 0) continue;
            std::vector<unsigned> alpha(n, 0);
            alpha[SparsePolynomial::var_index(g, i, j)] = 1;
            out.add_term(alpha, c);
        }
    return out;
}

}  // namespace siegelq
