#ifndef SIEGELQ_QSERIES_HPP
#define SIEGELQ_QSERIES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "siegelq/polyring.hpp"
#include "siegelq/rational.hpp"
#include "siegelq/tmatrix.hpp"

namespace siegelq {

// Coefficient-ring hooks.  Every ring provides ring_is_zero and
// ring_compatible overloads; rings with parameters (polynomial genus,
// residue modulus) check them in ring_compatible.
inline bool ring_is_zero(const Rational& c) { return c == 0; }
inline bool ring_is_zero(const SparsePolynomial& c) { return c.is_zero(); }
inline bool ring_compatible(const Rational&, const Rational&) { return true; }
inline bool ring_compatible(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.genus() == b.genus();
}
inline Rational ring_scale(const Rational& c, const Rational& s) { return c * s; }
inline SparsePolynomial ring_scale(const SparsePolynomial& c, const Rational& s) { return c * s; }

/// Truncated Fourier expansion sum_T a(T) q^{T/N} with PSD support and
/// trace-bound truncation; generic over the coefficient ring C.
template <class C>
class QExpansion {
public:
    QExpansion(unsigned genus, unsigned level, long trace_bound,
               std::optional<Rational> weight, C zero)
        : genus_(genus), level_(level), trace_bound_(trace_bound),
          weight_(std::move(weight)), zero_(std::move(zero)) {
        if (genus_ == 0) throw std::invalid_argument("QExpansion: genus must be >= 1");
        if (level_ == 0) throw std::invalid_argument("QExpansion: level must be >= 1");
        if (trace_bound_ < 0) throw std::invalid_argument("QExpansion: negative trace bound");
    }

    unsigned genus() const { return genus_; }
    unsigned level() const { return level_; }
    long trace_bound() const { return trace_bound_; }
    const std::optional<Rational>& weight() const { return weight_; }
    void set_weight(std::optional<Rational> w) { weight_ = std::move(w); }
    const C& zero_coeff() const { return zero_; }
    const std::map<HalfIntegralMatrix, C>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void set_coefficient(const HalfIntegralMatrix& T, const C& c) {
        check_key(T);
        if (ring_is_zero(c))
            coeffs_.erase(T);
        else
            coeffs_.insert_or_assign(T, c);
    }

    void add_coefficient(const HalfIntegralMatrix& T, const C& c) {
        check_key(T);
        auto it = coeffs_.find(T);
        if (it == coeffs_.end()) {
            if (!ring_is_zero(c)) coeffs_.emplace(T, c);
        } else {
            it->second = it->second + c;
            if (ring_is_zero(it->second)) coeffs_.erase(it);
        }
    }

    /// a(T).  Non-PSD T gives exact zero (the support condition); a trace
    /// beyond the truncation bound is unknown and raises an error.
    const C& coefficient_at(const HalfIntegralMatrix& T) const {
        if (T.genus() != genus_)
            throw std::invalid_argument("QExpansion::coefficient_at: genus mismatch");
        if (T.trace() > trace_bound_)
            throw std::out_of_range("QExpansion::coefficient_at: T beyond truncation bound");
        auto it = coeffs_.find(T);
        return it == coeffs_.end() ? zero_ : it->second;
    }

    bool operator==(const QExpansion& o) const {
        return genus_ == o.genus_ && level_ == o.level_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const QExpansion& o) const { return !(*this == o); }

private:
    void check_key(const HalfIntegralMatrix& T) {
        if (T.genus() != genus_)
            throw std::invalid_argument("QExpansion: key genus mismatch");
        if (!is_psd(T))
            throw std::invalid_argument("QExpansion: key must be positive semi-definite");
        if (T.trace() > trace_bound_)
            throw std::invalid_argument("QExpansion: key trace exceeds bound");
    }

    unsigned genus_;
    unsigned level_;
    long trace_bound_;
    std::optional<Rational> weight_;
    C zero_;
    std::map<HalfIntegralMatrix, C> coeffs_;
};

template <class C>
void check_same_series(const QExpansion<C>& f, const QExpansion<C>& g) {
    if (f.genus() != g.genus()) throw std::invalid_argument("QExpansion: genus mismatch");
    if (f.level() != g.level()) throw std::invalid_argument("QExpansion: level mismatch");
    if (!ring_compatible(f.zero_coeff(), g.zero_coeff()))
        throw std::invalid_argument("QExpansion: coefficient ring mismatch");
}

/// c1*f + c2*g, truncated to min(B_f, B_g).
template <class C>
QExpansion<C> qexp_add(const QExpansion<C>& f, const QExpansion<C>& g,
                       const Rational& c1 = Rational(1), const Rational& c2 = Rational(1)) {
    check_same_series(f, g);
    const long bound = std::min(f.trace_bound(), g.trace_bound());
    QExpansion<C> out(f.genus(), f.level(), bound, f.weight(), f.zero_coeff());
    for (const auto& [T, c] : f.terms())
        if (T.trace() <= bound) out.add_coefficient(T, ring_scale(c, c1));
    for (const auto& [T, c] : g.terms())
        if (T.trace() <= bound) out.add_coefficient(T, ring_scale(c, c2));
    return out;
}

template <class C>
QExpansion<C> qexp_scale(const QExpansion<C>& f, const Rational& c) {
    QExpansion<C> out(f.genus(), f.level(), f.trace_bound(), f.weight(), f.zero_coeff());
    for (const auto& [T, a] : f.terms()) out.add_coefficient(T, ring_scale(a, c));
    return out;
}

/// Convolution product; exact up to min(B_f, B_g) because trace is additive.
/// With nthreads > 1 the outer loop is partitioned; the merge is a sum of
/// exact coefficients per key, so the result is independent of thread count.
template <class C>
QExpansion<C> qexp_mul(const QExpansion<C>& f, const QExpansion<C>& g,
                       unsigned nthreads = 1) {
    check_same_series(f, g);
    const long bound = std::min(f.trace_bound(), g.trace_bound());
    std::optional<Rational> w;
    if (f.weight() && g.weight()) w = *f.weight() + *g.weight();
    QExpansion<C> out(f.genus(), f.level(), bound, w, f.zero_coeff());

    std::vector<const std::pair<const HalfIntegralMatrix, C>*> fterms;
    for (const auto& t : f.terms()) fterms.push_back(&t);

    auto convolve = [&](std::size_t begin, std::size_t end,
                        std::map<HalfIntegralMatrix, C>& local) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& [T1, c1] = *fterms[i];
            if (T1.trace() > bound) continue;
            for (const auto& [T2, c2] : g.terms()) {
                if (T1.trace() + T2.trace() > bound) continue;
                HalfIntegralMatrix T = add(T1, T2);
                C prod = c1 * c2;
                auto it = local.find(T);
                if (it == local.end())
                    local.emplace(std::move(T), std::move(prod));
                else
                    it->second = it->second + prod;
            }
        }
    };

    if (nthreads <= 1 || fterms.size() < 2) {
        std::map<HalfIntegralMatrix, C> acc;
        convolve(0, fterms.size(), acc);
        for (const auto& [T, c] : acc) out.add_coefficient(T, c);
        return out;
    }

    const unsigned n = std::min<unsigned>(nthreads, static_cast<unsigned>(fterms.size()));
    std::vector<std::map<HalfIntegralMatrix, C>> parts(n);
    std::vector<std::thread> pool;
    const std::size_t chunk = (fterms.size() + n - 1) / n;
    for (unsigned t = 0; t < n; ++t) {
        const std::size_t b = t * chunk;
        const std::size_t e = std::min(fterms.size(), b + chunk);
        pool.emplace_back([&, b, e, t] { convolve(b, e, parts[t]); });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
        for (const auto& [T, c] : part) out.add_coefficient(T, c);
    return out;
}

/// Outcome of the q-expansion-principle integrality check at p.
struct GateResult {
    bool ok = true;
    std::optional<HalfIntegralMatrix> witness_T;
    std::optional<SparsePolynomial::Exponents> witness_monomial;
    Rational witness_coeff = Rational(0);
};

GateResult integrality_gate(const QExpansion<Rational>& f, const Integer& p);
GateResult integrality_gate(const QExpansion<SparsePolynomial>& f, const Integer& p);

}  // namespace siegelq

#endif
