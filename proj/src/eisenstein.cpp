#include "siegelq/eisenstein.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "siegelq/io.hpp"

namespace siegelq {

Rational bernoulli(unsigned n) {
    static std::vector<Rational> cache = {Rational(1)};
    // B_n = -1/(n+1) sum_{k=0}^{n-1} C(n+1, k) B_k
    while (cache.size() <= n) {
        const unsigned nn = static_cast<unsigned>(cache.size());
        Rational sum(0);
        Integer binom(1);  // C(nn+1, 0)
        for (unsigned k = 0; k < nn; ++k) {
            sum += Rational(binom) * cache[k];
            binom = binom * (nn + 1 - k) / (k + 1);
        }
        cache.push_back(-sum / Rational(nn + 1));
    }
    return cache[n];
}

Integer divisor_sum(unsigned long n, unsigned k) {
    if (n == 0) throw std::invalid_argument("divisor_sum: n must be positive");
    Integer sum(0);
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += pow_integer(Integer(static_cast<long>(d)), k);
        const unsigned long e = n / d;
        if (e != d) sum += pow_integer(Integer(static_cast<long>(e)), k);
    }
    return sum;
}

namespace {

QExpansion<Rational> eisenstein_series(long h, long prec) {
    QExpansion<Rational> f(1, 1, prec, Rational(h), Rational(0));
    f.set_coefficient(HalfIntegralMatrix::diagonal({0}), Rational(1));
    const Rational factor = Rational(-2 * h) / bernoulli(static_cast<unsigned>(h));
    for (long n = 1; n <= prec; ++n)
        f.set_coefficient(HalfIntegralMatrix::diagonal({n}),
                          factor * Rational(divisor_sum(static_cast<unsigned long>(n),
                                                        static_cast<unsigned>(h - 1))));
    return f;
}

}  // namespace

QExpansion<Rational> eisenstein_q(long h, long prec) {
    if (h < 4 || h % 2 != 0)
        throw std::invalid_argument("eisenstein_q: weight must be even and >= 4");
    return eisenstein_series(h, prec);
}

QExpansion<Rational> eisenstein_e2(long prec) { return eisenstein_series(2, prec); }

PolyQExpansion eisenstein_e2_star(long prec) {
    PolyQExpansion f = lift_to_poly(eisenstein_e2(prec));
    SparsePolynomial c = f.coefficient_at(HalfIntegralMatrix::diagonal({0})) +
                         SparsePolynomial::variable(1, 0, 0) * Rational(12);
    f.set_coefficient(HalfIntegralMatrix::diagonal({0}), c);
    return f;
}

PolyQExpansion nearly_eisenstein(long h, long s, long prec) {
    if (s > 0) throw std::invalid_argument("nearly_eisenstein: s must be nonpositive");
    if (h + 2 * s < 4 || (h + 2 * s) % 2 != 0)
        throw std::invalid_argument(
            "nearly_eisenstein: ladder base weight h + 2s must be even and >= 4");
    PolyQExpansion base = lift_to_poly(eisenstein_q(h + 2 * s, prec));
    return delta_ladder(base, h, s);
}

QExpansion<Rational> load_coefficient_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_coefficient_table: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    io::json j = io::parse(buf.str());
    if (j.contains("header")) {
        const auto& h = j.at("header");
        if (!h.is_object())
            throw std::invalid_argument("load_coefficient_table: header must be an object");
        for (const auto& [k, v] : h.items())
            if (k != "source" && k != "normalization" && k != "citation")
                throw std::invalid_argument(
                    "load_coefficient_table: unknown header field '" + k + "'");
    }
    // Construction enforces PSD support, even diagonal and trace bound;
    // violations surface as invalid_argument with the offending term.
    return io::rational_expansion_from_json(j);
}

}  // namespace siegelq
