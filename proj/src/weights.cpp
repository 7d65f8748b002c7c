#include "siegelq/weights.hpp"

#include <stdexcept>

namespace siegelq {

bool is_dominant(const std::vector<long>& kappa) {
    if (kappa.empty()) return false;
    for (std::size_t i = 0; i + 1 < kappa.size(); ++i)
        if (kappa[i] < kappa[i + 1]) return false;
    return kappa.back() >= 0;
}

namespace {

Integer exact_integer(const Rational& r) {
    if (r.get_den() != 1)
        throw std::logic_error("weights: Weyl product did not cancel to an integer");
    return r.get_num();
}

}  // namespace

Integer dim_gl(const std::vector<long>& kappa) {
    if (!is_dominant(kappa)) throw std::invalid_argument("dim_gl: weight is not dominant");
    const std::size_t g = kappa.size();
    Rational d(1);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            d *= frac(kappa[i] - kappa[j] + static_cast<long>(j - i),
                      static_cast<long>(j - i));
    return exact_integer(d);
}

Integer dim_sp(const std::vector<long>& kappa) {
    if (!is_dominant(kappa)) throw std::invalid_argument("dim_sp: weight is not dominant");
    const std::size_t g = kappa.size();
    // l_i = kappa_i + g - i, m_i = g - i (1-based: kappa_i + g - i + 1).
    std::vector<long> l(g), m(g);
    for (std::size_t i = 0; i < g; ++i) {
        l[i] = kappa[i] + static_cast<long>(g - i);
        m[i] = static_cast<long>(g - i);
    }
    Rational d(1);
    for (std::size_t i = 0; i < g; ++i) {
        d *= frac(l[i], m[i]);  // roots 2e_i
        for (std::size_t j = i + 1; j < g; ++j)
            d *= frac(l[i] * l[i] - l[j] * l[j], m[i] * m[i] - m[j] * m[j]);
    }
    return exact_integer(d);
}

}  // namespace siegelq
