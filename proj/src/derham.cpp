#include "siegelq/derham.hpp"

#include <stdexcept>

namespace siegelq {

void DeRhamCoefficient::add_term(const Index& idx, const SparsePolynomial& c) {
    if (idx.size() != degree_)
        throw std::invalid_argument("DeRhamCoefficient: index vector has wrong length");
    for (unsigned e : idx)
        if (e >= 2 * genus_)
            throw std::out_of_range("DeRhamCoefficient: tensor index out of range");
    if (c.genus() != genus_)
        throw std::invalid_argument("DeRhamCoefficient: coefficient genus mismatch");
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(idx, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool DeRhamCoefficient::omega_only() const {
    for (const auto& [idx, c] : terms_)
        for (unsigned e : idx)
            if (e >= genus_) return false;
    return true;
}

DeRhamCoefficient DeRhamCoefficient::operator+(const DeRhamCoefficient& o) const {
    if (!ring_compatible(*this, o))
        throw std::invalid_argument("DeRhamCoefficient: shape mismatch in addition");
    DeRhamCoefficient out(*this);
    for (const auto& [idx, c] : o.terms_) out.add_term(idx, c);
    return out;
}

DeRhamCoefficient DeRhamCoefficient::scaled(const Rational& s) const {
    DeRhamCoefficient out(genus_, degree_);
    if (s == 0) return out;
    for (const auto& [idx, c] : terms_) out.add_term(idx, c * s);
    return out;
}

DeRhamQExpansion derham_qexpansion(unsigned genus, unsigned level, long trace_bound,
                                   unsigned tensor_degree,
                                   std::optional<Rational> weight) {
    return DeRhamQExpansion(genus, level, trace_bound, std::move(weight),
                            DeRhamCoefficient(genus, tensor_degree));
}

namespace {

// Substitute one tensor index through phi: omega fixed, eta_i -> sum_k r_ik omega_k.
DeRhamCoefficient phi_coeff(const DeRhamCoefficient& v) {
    const unsigned g = v.genus();
    DeRhamCoefficient out(g, v.tensor_degree());
    for (const auto& [idx, poly] : v.terms()) {
        std::vector<std::pair<DeRhamCoefficient::Index, SparsePolynomial>> partial;
        partial.emplace_back(DeRhamCoefficient::Index{}, poly);
        for (unsigned e : idx) {
            std::vector<std::pair<DeRhamCoefficient::Index, SparsePolynomial>> next;
            for (const auto& [pidx, pc] : partial) {
                if (e < g) {
                    auto nidx = pidx;
                    nidx.push_back(e);
                    next.emplace_back(std::move(nidx), pc);
                } else {
                    const unsigned i = e - g;
                    for (unsigned k = 0; k < g; ++k) {
                        auto nidx = pidx;
                        nidx.push_back(k);
                        next.emplace_back(std::move(nidx),
                                          pc * SparsePolynomial::variable(g, i, k));
                    }
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pidx, pc] : partial) out.add_term(pidx, pc);
    }
    return out;
}

}  // namespace

DeRhamQExpansion phi_realize(const DeRhamQExpansion& F) {
    DeRhamQExpansion out(F.genus(), F.level(), F.trace_bound(), F.weight(), F.zero_coeff());
    for (const auto& [T, v] : F.terms()) out.add_coefficient(T, phi_coeff(v));
    return out;
}

DeRhamQExpansion evaluate_at_r_zero(const DeRhamQExpansion& F) {
    DeRhamQExpansion out(F.genus(), F.level(), F.trace_bound(), F.weight(), F.zero_coeff());
    for (const auto& [T, v] : F.terms()) {
        DeRhamCoefficient nv(F.genus(), v.tensor_degree());
        for (const auto& [idx, poly] : v.terms()) nv.add_term(idx, poly.eval_at_zero());
        out.add_coefficient(T, nv);
    }
    return out;
}

DeRhamQExpansion unit_root_realize(const DeRhamQExpansion& F) {
    const unsigned g = F.genus();
    DeRhamQExpansion out(g, F.level(), F.trace_bound(), F.weight(), F.zero_coeff());
    for (const auto& [T, v] : F.terms()) {
        DeRhamCoefficient nv(g, v.tensor_degree());
        for (const auto& [idx, poly] : v.terms()) {
            bool has_eta = false;
            for (unsigned e : idx)
                if (e >= g) { has_eta = true; break; }
            if (!has_eta) nv.add_term(idx, poly.eval_at_zero());
        }
        out.add_coefficient(T, nv);
    }
    return out;
}

std::map<std::pair<unsigned, unsigned>, DeRhamQExpansion>
gauss_manin(const DeRhamQExpansion& F) {
    const unsigned g = F.genus();
    std::map<std::pair<unsigned, unsigned>, DeRhamQExpansion> out;
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i; j < g; ++j)
            out.emplace(std::make_pair(i, j),
                        derham_qexpansion(g, F.level(), F.trace_bound(),
                                          F.zero_coeff().tensor_degree(), F.weight()));
    for (const auto& [T, v] : F.terms()) {
        for (const auto& [idx, poly] : v.terms()) {
            // q-monomial derivative: slot (i,j) picks up (2 - delta_ij) t_ij / N
            for (unsigned i = 0; i < g; ++i)
                for (unsigned j = i; j < g; ++j) {
                    Rational tfac = i == j ? frac(T.doubled(i, i), 2)
                                           : Rational(T.doubled(i, j));
                    tfac /= Rational(static_cast<long>(F.level()));
                    if (tfac == 0) continue;
                    DeRhamCoefficient c(g, v.tensor_degree());
                    c.add_term(idx, poly * tfac);
                    out.at({i, j}).add_coefficient(T, c);
                }
            // nabla(omega_a) = sum_b (dq_ab / q_ab) eta_b; eta indices are flat
            for (unsigned pos = 0; pos < idx.size(); ++pos) {
                const unsigned a = idx[pos];
                if (a >= g) continue;
                for (unsigned b = 0; b < g; ++b) {
                    auto nidx = idx;
                    nidx[pos] = g + b;
                    DeRhamCoefficient c(g, v.tensor_degree());
                    c.add_term(nidx, poly);
                    out.at({std::min(a, b), std::max(a, b)}).add_coefficient(T, c);
                }
            }
        }
    }
    return out;
}

std::size_t phi_substitution_rank(unsigned genus, unsigned tensor_degree) {
    const unsigned g = genus;
    const unsigned m = tensor_degree;
    std::size_t ncols = 1;
    for (unsigned k = 0; k < m; ++k) ncols *= 2 * g;

    // Row key: (omega index vector, r-monomial exponents).
    std::map<std::pair<DeRhamCoefficient::Index, SparsePolynomial::Exponents>,
             std::size_t> rows;
    std::vector<std::map<std::size_t, Rational>> cols(ncols);

    for (std::size_t col = 0; col < ncols; ++col) {
        DeRhamCoefficient::Index idx(m);
        std::size_t rem = col;
        for (unsigned k = 0; k < m; ++k) {
            idx[k] = static_cast<unsigned>(rem % (2 * g));
            rem /= 2 * g;
        }
        DeRhamCoefficient v(g, m);
        v.add_term(idx, Rational(1));
        DeRhamCoefficient image = phi_coeff(v);
        for (const auto& [widx, poly] : image.terms())
            for (const auto& [mono, c] : poly.terms()) {
                auto key = std::make_pair(widx, mono);
                auto [it, inserted] = rows.emplace(key, rows.size());
                cols[col][it->second] = c;
            }
    }

    // Sparse echelon over Q, basis keyed by leading row.
    std::map<std::size_t, std::map<std::size_t, Rational>> basis;
    for (auto& colvec : cols) {
        auto v = colvec;
        while (!v.empty()) {
            const std::size_t lead = v.begin()->first;
            auto bit = basis.find(lead);
            if (bit == basis.end()) break;
            const Rational factor = v.begin()->second / bit->second.begin()->second;
            for (const auto& [r, c] : bit->second) {
                auto vit = v.find(r);
                if (vit == v.end()) {
                    v[r] = -factor * c;
                    if (v[r] == 0) v.erase(r);
                } else {
                    vit->second -= factor * c;
                    if (vit->second == 0) v.erase(vit);
                }
            }
        }
        if (!v.empty()) basis.emplace(v.begin()->first, std::move(v));
    }
    return basis.size();
}

}  // namespace siegelq
