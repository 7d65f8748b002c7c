#ifndef SIEGELQ_TMATRIX_HPP
#define SIEGELQ_TMATRIX_HPP

#include <cstddef>
#include <vector>

#include "siegelq/rational.hpp"

namespace siegelq {

/// Half-integral symmetric g x g matrix T indexing a Fourier term q^{T/N}.
/// Stored as the doubled matrix S = 2T, which is integral with even diagonal.
class HalfIntegralMatrix {
public:
    /// Construct from the doubled matrix S = 2T, row-major, length g*g.
    HalfIntegralMatrix(unsigned genus, std::vector<long> doubled);

    static HalfIntegralMatrix zero(unsigned genus);
    static HalfIntegralMatrix diagonal(const std::vector<long>& diag);

    unsigned genus() const { return genus_; }
    /// Entry of S = 2T.
    long doubled(unsigned i, unsigned j) const { return s_[i * genus_ + j]; }
    const std::vector<long>& doubled_flat() const { return s_; }

    Rational entry(unsigned i, unsigned j) const;  // t_ij = S_ij / 2
    long trace() const;                            // integer since diagonal of S is even

    bool operator==(const HalfIntegralMatrix& o) const {
        return genus_ == o.genus_ && s_ == o.s_;
    }
    bool operator!=(const HalfIntegralMatrix& o) const { return !(*this == o); }
    /// Lexicographic on (genus, flattened S); the canonical term order.
    bool operator<(const HalfIntegralMatrix& o) const {
        if (genus_ != o.genus_) return genus_ < o.genus_;
        return s_ < o.s_;
    }

private:
    unsigned genus_;
    std::vector<long> s_;
};

/// Exact positive semi-definiteness: all 2^g - 1 principal minors of T are >= 0.
bool is_psd(const HalfIntegralMatrix& T);

/// Exact det(T); the denominator is a power of 2.
Rational det_rational(const HalfIntegralMatrix& T);

HalfIntegralMatrix add(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b);

/// All PSD half-integral T with tr(T) <= max_trace, sorted in canonical order.
/// Throws std::runtime_error if more than count_cap matrices would be produced.
std::vector<HalfIntegralMatrix> enumerate_psd(unsigned genus, long max_trace,
                                              std::size_t count_cap = 1000000);

}  // namespace siegelq

#endif
