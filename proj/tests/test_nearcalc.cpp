#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "siegelq/eisenstein.hpp"
#include "siegelq/nearcalc.hpp"

using namespace siegelq;

namespace {

HalfIntegralMatrix q1(long n) { return HalfIntegralMatrix::diagonal({n}); }

SparsePolynomial r11(unsigned g = 1) { return SparsePolynomial::variable(g, 0, 0); }

PolyQExpansion random_poly_expansion(std::mt19937& rng, unsigned g, long bound,
                                     int max_rdeg = 2) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> expo(0, static_cast<unsigned>(max_rdeg));
    PolyQExpansion f = poly_qexpansion(g, 1, bound);
    for (const auto& T : enumerate_psd(g, bound)) {
        SparsePolynomial p(g);
        for (int t = 0; t < 2; ++t) {
            SparsePolynomial::Exponents e(SparsePolynomial::num_vars(g), 0);
            unsigned total = 0;
            for (auto& x : e) {
                x = expo(rng);
                total += x;
            }
            if (total > static_cast<unsigned>(max_rdeg)) continue;
            p.add_term(e, Rational(coeff(rng)));
        }
        f.add_coefficient(T, p);
    }
    return f;
}

// ---- complex finite-difference oracle for the derivative rules ----
//
// For a smooth function F of Z = X + iY (symmetric), the normalized
// derivative is dF/d(2 pi i z_ab) with z_ab = z_ba varied jointly:
// d/dz = (1/2)(d/dx - i d/dy) entrywise on the (a,b) pair.

using Cplx = std::complex<double>;

using Mat = std::vector<std::vector<double>>;

Mat inverse(const Mat& m) {
    const std::size_t n = m.size();
    Mat a = m, inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t rr = c + 1; rr < n; ++rr)
            if (std::abs(a[rr][c]) > std::abs(a[piv][c])) piv = rr;
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        const double d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t rr = 0; rr < n; ++rr) {
            if (rr == c) continue;
            const double f = a[rr][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[rr][j] -= f * a[c][j];
                inv[rr][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

double det(const Mat& m) {
    Mat a = m;
    const std::size_t n = a.size();
    double d = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t rr = c + 1; rr < n; ++rr)
            if (std::abs(a[rr][c]) > std::abs(a[piv][c])) piv = rr;
        if (piv != c) {
            std::swap(a[c], a[piv]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t rr = c + 1; rr < n; ++rr) {
            const double f = a[rr][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[rr][j] -= f * a[c][j];
        }
    }
    return d;
}

constexpr double kPi = 3.14159265358979323846;

// r_kl(Z) = entry of -(1/4 pi) Y^{-1}
double r_entry(const Mat& Y, unsigned k, unsigned l) {
    return -inverse(Y)[k][l] / (4.0 * kPi);
}

// log det(Z - Zbar) = log det(2iY): take log|det(2Y)| (the constant phase
// i^g drops out of derivatives)
double logdet_2y(const Mat& Y) {
    Mat m = Y;
    for (auto& row : m)
        for (auto& v : row) v *= 2.0;
    return std::log(std::abs(det(m)));
}

// d/d(2 pi i z_ab) F for a real-valued F(X, Y): (1/(4 pi i))(dF/dx - i dF/dy)
// with the symmetric pair (a,b),(b,a) varied jointly.
template <class F>
Cplx normalized_z_derivative(F&& func, Mat X, Mat Y, unsigned a, unsigned b) {
    const double h = 1e-5;
    auto bump = [&](Mat& M, double d) {
        M[a][b] += d;
        if (a != b) M[b][a] += d;
    };
    Mat Xp = X, Xm = X, Yp = Y, Ym = Y;
    bump(Xp, h);
    bump(Xm, -h);
    bump(Yp, h);
    bump(Ym, -h);
    const double dfdx = (func(Xp, Y) - func(Xm, Y)) / (2 * h);
    const double dfdy = (func(X, Yp) - func(X, Ym)) / (2 * h);
    return (Cplx(dfdx, 0) - Cplx(0, 1) * Cplx(dfdy, 0)) / (Cplx(0, 1) * 4.0 * kPi);
}

Mat random_point_y(std::mt19937& rng, unsigned g) {
    std::uniform_real_distribution<double> off(-0.2, 0.2);
    std::uniform_real_distribution<double> diag(0.8, 2.0);
    Mat Y(g, std::vector<double>(g, 0.0));
    for (unsigned i = 0; i < g; ++i) {
        Y[i][i] = diag(rng);
        for (unsigned j = i + 1; j < g; ++j) Y[i][j] = Y[j][i] = off(rng);
    }
    return Y;
}

double eval_poly_at(const SparsePolynomial& p, const Mat& Y) {
    const unsigned g = p.genus();
    double acc = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double term = c.get_d();
        for (unsigned v = 0; v < e.size(); ++v) {
            auto [k, l] = SparsePolynomial::var_pair(g, v);
            for (unsigned x = 0; x < e[v]; ++x) term *= r_entry(Y, k, l);
        }
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_CASE("partial_z on q and on r11 (genus 1)") {
    PolyQExpansion f = poly_qexpansion(1, 1, 5);
    f.set_coefficient(q1(1), SparsePolynomial(1, Rational(1)));  // f = q
    CHECK(partial_z(f, 0, 0) == f);

    PolyQExpansion g = poly_qexpansion(1, 1, 5);
    g.set_coefficient(q1(0), r11());
    auto dg = partial_z(g, 0, 0);
    CHECK(dg.coefficient_at(q1(0)) == -(r11() * r11()));
}

TEST_CASE("partial_z matrix rule at genus 2") {
    PolyQExpansion f = poly_qexpansion(2, 1, 3);
    f.set_coefficient(HalfIntegralMatrix::zero(2), SparsePolynomial::variable(2, 0, 1));
    auto df = partial_z(f, 0, 0);
    auto want = -(SparsePolynomial::variable(2, 0, 0) * SparsePolynomial::variable(2, 0, 1));
    CHECK(df.coefficient_at(HalfIntegralMatrix::zero(2)) == want);
    CHECK_THROWS_AS(partial_z(f, 0, 2), std::out_of_range);
}

TEST_CASE("derivative rule for r_kl matches the finite-difference oracle") {
    std::mt19937 rng(424242);
    for (unsigned g : {1u, 2u}) {
        for (int pt = 0; pt < 10; ++pt) {
            Mat Y = random_point_y(rng, g);
            Mat X(g, std::vector<double>(g, 0.0));
            for (unsigned a = 0; a < g; ++a)
                for (unsigned b = a; b < g; ++b)
                    for (unsigned k = 0; k < g; ++k)
                        for (unsigned l = k; l < g; ++l) {
                            auto func = [&](const Mat&, const Mat& Yv) {
                                return r_entry(Yv, k, l);
                            };
                            Cplx numeric = normalized_z_derivative(func, X, Y, a, b);
                            // symbolic rule evaluated at the same point
                            PolyQExpansion h = poly_qexpansion(g, 1, 1);
                            h.set_coefficient(HalfIntegralMatrix::zero(g),
                                              SparsePolynomial::variable(g, k, l));
                            auto dh = partial_z(h, a, b);
                            const double symbolic =
                                eval_poly_at(dh.coefficient_at(HalfIntegralMatrix::zero(g)), Y);
                            CHECK(std::abs(numeric.imag()) < 1e-7 * (1 + std::abs(symbolic)));
                            CHECK(std::abs(numeric.real() - symbolic) <
                                  1e-8 * (1.0 + std::abs(symbolic)) + 1e-9);
                        }
        }
    }
}

TEST_CASE("log det(Z - Zbar) rule matches the finite-difference oracle") {
    std::mt19937 rng(777);
    for (unsigned g : {1u, 2u}) {
        for (int pt = 0; pt < 10; ++pt) {
            Mat Y = random_point_y(rng, g);
            Mat X(g, std::vector<double>(g, 0.0));
            for (unsigned a = 0; a < g; ++a)
                for (unsigned b = a; b < g; ++b) {
                    auto func = [&](const Mat&, const Mat& Yv) { return logdet_2y(Yv); };
                    Cplx numeric = normalized_z_derivative(func, X, Y, a, b);
                    const double want = (a == b ? 1.0 : 2.0) * r_entry(Y, a, b);
                    CHECK(std::abs(numeric.imag()) < 1e-7 * (1 + std::abs(want)));
                    CHECK(std::abs(numeric.real() - want) <
                          1e-8 * (1.0 + std::abs(want)) + 1e-9);
                }
        }
    }
}

TEST_CASE("shimura_D on constants and on E4") {
    // g=1, f=1, h=0 -> 0
    PolyQExpansion one = poly_qexpansion(1, 1, 5);
    one.set_coefficient(q1(0), SparsePolynomial(1, Rational(1)));
    CHECK(shimura_D(one, 0).is_zero());

    // g=2, f=1, h=1 -> slot (a,b) carries (2 - delta_ab) r_ab
    PolyQExpansion one2 = poly_qexpansion(2, 1, 3);
    one2.set_coefficient(HalfIntegralMatrix::zero(2), SparsePolynomial(2, Rational(1)));
    auto D = shimura_D(one2, 1);
    const auto& v = D.coefficient_at(HalfIntegralMatrix::zero(2));
    for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = a; b < 2; ++b) {
            std::vector<unsigned> slot(3, 0);
            slot[SparsePolynomial::var_index(2, a, b)] = 1;
            auto want = SparsePolynomial::variable(2, a, b) * Rational(a == b ? 1 : 2);
            CHECK(v.term_at(slot) == want);
        }

    // g=1: the single slot of shimura_D(E4, 4) equals maass_delta(E4, 4)
    auto e4 = lift_to_poly(eisenstein_q(4, 10));
    auto De4 = shimura_D(e4, 4);
    auto delta_e4 = maass_delta(e4, Rational(4));
    std::vector<unsigned> slot{1};
    for (const auto& [T, c] : delta_e4.terms())
        CHECK(De4.coefficient_at(T).term_at(slot) == c);
}

TEST_CASE("contraction dual-basis identities") {
    // g=1, e=1: self-dual 1-dim Sym^2
    SymPoly<Rational> h(1, 1, Rational(0));
    h.add_term({1}, Rational(1));
    CHECK(contract(h, dual_expand(h)) == Rational(1));
    CHECK(contract(h, h) == Rational(1));

    // g=2, e=1: Gram matrix of {E11, E22, E12+E21} is diag(1,1,2)
    for (unsigned s = 0; s < 3; ++s) {
        SymPoly<Rational> us(2, 1, Rational(0));
        std::vector<unsigned> alpha(3, 0);
        alpha[s] = 1;
        us.add_term(alpha, Rational(1));
        auto [i, j] = SparsePolynomial::var_pair(2, s);
        CHECK(contract(us, us) == (i == j ? Rational(1) : Rational(1, 2)));
        for (unsigned t = 0; t < 3; ++t) {
            if (t == s) continue;
            SymPoly<Rational> ut(2, 1, Rational(0));
            std::vector<unsigned> beta(3, 0);
            beta[t] = 1;
            ut.add_term(beta, Rational(1));
            CHECK(contract(us, ut) == Rational(0));
        }
    }

    // contraction . dual_expand reconstructs coefficients for e <= 2, g = 2
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (unsigned e : {1u, 2u}) {
        SymPoly<Rational> A(2, e, Rational(0));
        // all monomials of degree e in 3 slots
        std::vector<std::vector<unsigned>> monos;
        for (unsigned a = 0; a <= e; ++a)
            for (unsigned b = 0; a + b <= e; ++b)
                monos.push_back({a, b, e - a - b});
        for (const auto& mo : monos) A.add_term(mo, Rational(coeff(rng)));
        for (const auto& mo : monos) {
            SymPoly<Rational> basis(2, e, Rational(0));
            basis.add_term(mo, Rational(1));
            CHECK(contract(A, dual_expand(basis)) == A.term_at(mo));
        }
    }

    // slot-arity mismatch
    SymPoly<Rational> d1(2, 1, Rational(0));
    SymPoly<Rational> d2(2, 2, Rational(0));
    CHECK_THROWS(contract(d1, d2));
}

TEST_CASE("maass_delta genus-1 closed form on random inputs") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 25; ++iter) {
        auto f = random_poly_expansion(rng, 1, 4);
        const Rational h(iter % 7);
        auto lhs = maass_delta(f, h);
        // theta_q f + h r f - r^2 d/dr f
        PolyQExpansion rhs = poly_qexpansion(1, 1, 4);
        for (const auto& [T, c] : f.terms()) {
            const Rational n = frac(T.doubled(0, 0), 2);
            rhs.add_coefficient(T, c * n + r11() * c * h - r11() * r11() * c.derive(0));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("maass_delta entries commute: both composition orders agree (g=2)") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        auto f = random_poly_expansion(rng, 2, 3, 2);
        for (long h : {2L, 3L, 4L})
            CHECK(maass_delta(f, Rational(h), false) == maass_delta(f, Rational(h), true));
    }
}

TEST_CASE("holomorphic compatibility: r->0 of maass_delta is theta_q") {
    auto e4 = lift_to_poly(eisenstein_q(4, 12));
    auto d = maass_delta(e4, Rational(4));
    for (const auto& [T, c] : d.terms()) {
        const Rational n = frac(T.doubled(0, 0), 2);
        CHECK(c.eval_at_zero() == e4.coefficient_at(T).eval_at_zero() * n);
    }
}

TEST_CASE("delta_ladder") {
    auto e4 = lift_to_poly(eisenstein_q(4, 10));
    CHECK(delta_ladder(e4, 4, 0) == e4);

    auto lad = delta_ladder(e4, 6, -1);  // delta_4(E4)/eps_1(4)
    auto direct = qexp_scale(maass_delta(e4, Rational(4)), Rational(1, 4));
    CHECK(lad == direct);
    CHECK(lad.coefficient_at(q1(1)).eval_at_zero() == Rational(60));

    CHECK(epsilon_g(1, Rational(6)) == Rational(6));
    CHECK(epsilon_g(2, Rational(6)) == Rational(33));  // 6 * 11/2
    CHECK(epsilon_g(2, Rational(1, 2)) == Rational(0));

    // eps zero inside the ladder product is a reported division error
    PolyQExpansion c = poly_qexpansion(1, 1, 3);
    c.set_coefficient(q1(0), SparsePolynomial(1, Rational(1)));
    CHECK_THROWS_AS(delta_ladder(c, 2, -1), std::domain_error);
    // non-holomorphic input rejected
    PolyQExpansion nh = poly_qexpansion(1, 1, 3);
    nh.set_coefficient(q1(0), r11());
    CHECK_THROWS_AS(delta_ladder(nh, 6, -1), std::invalid_argument);
}
