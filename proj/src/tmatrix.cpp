#include "siegelq/tmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace siegelq {

HalfIntegralMatrix::HalfIntegralMatrix(unsigned genus, std::vector<long> doubled)
    : genus_(genus), s_(std::move(doubled)) {
    if (genus_ == 0) throw std::invalid_argument("HalfIntegralMatrix: genus must be >= 1");
    if (s_.size() != static_cast<std::size_t>(genus_) * genus_)
        throw std::invalid_argument("HalfIntegralMatrix: doubled matrix has wrong size");
    for (unsigned i = 0; i < genus_; ++i) {
        if (s_[i * genus_ + i] % 2 != 0)
            throw std::invalid_argument("HalfIntegralMatrix: diagonal of S = 2T must be even");
        for (unsigned j = i + 1; j < genus_; ++j)
            if (s_[i * genus_ + j] != s_[j * genus_ + i])
                throw std::invalid_argument("HalfIntegralMatrix: S must be symmetric");
    }
}

HalfIntegralMatrix HalfIntegralMatrix::zero(unsigned genus) {
    return HalfIntegralMatrix(genus, std::vector<long>(static_cast<std::size_t>(genus) * genus, 0));
}

HalfIntegralMatrix HalfIntegralMatrix::diagonal(const std::vector<long>& diag) {
    const unsigned g = static_cast<unsigned>(diag.size());
    std::vector<long> s(static_cast<std::size_t>(g) * g, 0);
    for (unsigned i = 0; i < g; ++i) s[i * g + i] = 2 * diag[i];
    return HalfIntegralMatrix(g, std::move(s));
}

Rational HalfIntegralMatrix::entry(unsigned i, unsigned j) const {
    Rational r(doubled(i, j), 2);
    r.canonicalize();
    return r;
}

long HalfIntegralMatrix::trace() const {
    long t = 0;
    for (unsigned i = 0; i < genus_; ++i) t += doubled(i, i) / 2;
    return t;
}

namespace {

// Exact integer determinant of the principal submatrix of S picked by idx,
// by cofactor expansion (g <= 6 at desk scale).
Integer minor_det(const HalfIntegralMatrix& T, const std::vector<unsigned>& idx) {
    const std::size_t n = idx.size();
    if (n == 0) return 1;
    if (n == 1) return Integer(T.doubled(idx[0], idx[0]));
    std::vector<Integer> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = T.doubled(idx[i], idx[j]);
    // Bareiss fraction-free elimination.
    Integer prev(1);
    std::vector<Integer> a = m;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv * n + k] == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

}  // namespace

bool is_psd(const HalfIntegralMatrix& T) {
    const unsigned g = T.genus();
    // det of a principal submatrix of S is 2^|I| times the one of T, same sign.
    for (unsigned mask = 1; mask < (1u << g); ++mask) {
        std::vector<unsigned> idx;
        for (unsigned i = 0; i < g; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (minor_det(T, idx) < 0) return false;
    }
    return true;
}

Rational det_rational(const HalfIntegralMatrix& T) {
    std::vector<unsigned> idx(T.genus());
    for (unsigned i = 0; i < T.genus(); ++i) idx[i] = i;
    Rational r(minor_det(T, idx), pow_integer(2, T.genus()));
    r.canonicalize();
    return r;
}

HalfIntegralMatrix add(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b) {
    if (a.genus() != b.genus())
        throw std::invalid_argument("tmatrix add: genus mismatch");
    std::vector<long> s(a.doubled_flat());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b.doubled_flat()[i];
    return HalfIntegralMatrix(a.genus(), std::move(s));
}

namespace {

void enumerate_rec(unsigned g, long max_trace, std::size_t cap,
                   std::vector<long>& diag, unsigned pos,
                   std::vector<HalfIntegralMatrix>& out) {
    if (pos == g) {
        // Fill off-diagonals within the PSD box |t_ij| <= sqrt(t_ii t_jj),
        // i.e. S_ij^2 <= S_ii S_jj, then filter exactly.
        std::vector<std::pair<unsigned, unsigned>> offs;
        for (unsigned i = 0; i < g; ++i)
            for (unsigned j = i + 1; j < g; ++j) offs.emplace_back(i, j);
        std::vector<long> s(static_cast<std::size_t>(g) * g, 0);
        for (unsigned i = 0; i < g; ++i) s[i * g + i] = 2 * diag[i];

        std::vector<long> vals(offs.size(), 0);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == offs.size()) {
                HalfIntegralMatrix T(g, s);
                if (is_psd(T)) {
                    if (out.size() >= cap)
                        throw std::runtime_error("enumerate_psd: count cap exceeded");
                    out.push_back(std::move(T));
                }
                return;
            }
            auto [i, j] = offs[k];
            const long bound2 = s[i * g + i] * s[j * g + j];  // S_ii S_jj
            long b = static_cast<long>(std::sqrt(static_cast<double>(bound2)));
            while (b * b > bound2) --b;
            while ((b + 1) * (b + 1) <= bound2) ++b;
            for (long v = -b; v <= b; ++v) {
                s[i * g + j] = s[j * g + i] = v;
                self(self, k + 1);
            }
            s[i * g + j] = s[j * g + i] = 0;
        };
        rec(rec, 0);
        return;
    }
    long used = 0;
    for (unsigned i = 0; i < pos; ++i) used += diag[i];
    for (long t = 0; t <= max_trace - used; ++t) {
        diag[pos] = t;
        enumerate_rec(g, max_trace, cap, diag, pos + 1, out);
    }
}

}  // namespace

std::vector<HalfIntegralMatrix> enumerate_psd(unsigned genus, long max_trace,
                                              std::size_t count_cap) {
    if (genus == 0) throw std::invalid_argument("enumerate_psd: genus must be >= 1");
    std::vector<HalfIntegralMatrix> out;
    std::vector<long> diag(genus, 0);
    enumerate_rec(genus, max_trace, count_cap, diag, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace siegelq
