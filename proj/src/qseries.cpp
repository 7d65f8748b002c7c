#include "siegelq/qseries.hpp"

namespace siegelq {

GateResult integrality_gate(const QExpansion<Rational>& f, const Integer& p) {
    for (const auto& [T, c] : f.terms()) {
        if (!denominator_coprime_to(c, p)) {
            GateResult r;
            r.ok = false;
            r.witness_T = T;
            r.witness_coeff = c;
            return r;
        }
    }
    return {};
}

GateResult integrality_gate(const QExpansion<SparsePolynomial>& f, const Integer& p) {
    for (const auto& [T, poly] : f.terms()) {
        for (const auto& [mono, c] : poly.terms()) {
            if (!denominator_coprime_to(c, p)) {
                GateResult r;
                r.ok = false;
                r.witness_T = T;
                r.witness_monomial = mono;
                r.witness_coeff = c;
                return r;
            }
        }
    }
    return {};
}

}  // namespace siegelq
