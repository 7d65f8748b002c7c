#include "siegelq/polyring.hpp"

#include <sstream>
#include <stdexcept>

namespace siegelq {

SparsePolynomial::SparsePolynomial(unsigned genus) : genus_(genus) {
    if (genus_ == 0) throw std::invalid_argument("SparsePolynomial: genus must be >= 1");
}

SparsePolynomial::SparsePolynomial(unsigned genus, const Rational& constant)
    : SparsePolynomial(genus) {
    if (constant != 0) terms_[Exponents(num_vars(genus), 0)] = constant;
}

unsigned SparsePolynomial::var_index(unsigned genus, unsigned i, unsigned j) {
    if (i > j) std::swap(i, j);
    if (j >= genus) throw std::out_of_range("SparsePolynomial: variable index out of range");
    // row-major over pairs (i,j), i <= j
    return i * genus - i * (i + 1) / 2 + j;
}

std::pair<unsigned, unsigned> SparsePolynomial::var_pair(unsigned genus, unsigned v) {
    for (unsigned i = 0; i < genus; ++i)
        for (unsigned j = i; j < genus; ++j)
            if (var_index(genus, i, j) == v) return {i, j};
    throw std::out_of_range("SparsePolynomial: flat variable index out of range");
}

SparsePolynomial SparsePolynomial::variable(unsigned genus, unsigned i, unsigned j) {
    SparsePolynomial p(genus);
    Exponents e(num_vars(genus), 0);
    e[var_index(genus, i, j)] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

bool SparsePolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (unsigned e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

int SparsePolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (unsigned x : e) t += static_cast<int>(x);
        if (t > d) d = t;
    }
    return d;
}

Rational SparsePolynomial::constant_term() const {
    Exponents zero(num_vars(genus_), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != num_vars(genus_))
        throw std::invalid_argument("SparsePolynomial: exponent vector has wrong length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePolynomial::check_compat(const SparsePolynomial& o) const {
    if (genus_ != o.genus_)
        throw std::invalid_argument("SparsePolynomial: genus mismatch");
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial out(genus_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    check_compat(o);
    SparsePolynomial out(*this);
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    return *this + (-o);
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    check_compat(o);
    SparsePolynomial out(genus_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
            out.add_term(e, c1 * c2);
        }
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
    SparsePolynomial out(genus_);
    if (c == 0) return out;
    for (const auto& [e, t] : terms_) out.terms_[e] = t * c;
    return out;
}

SparsePolynomial SparsePolynomial::derive(unsigned var) const {
    if (var >= num_vars(genus_))
        throw std::out_of_range("SparsePolynomial::derive: variable out of range");
    SparsePolynomial out(genus_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d(e);
        d[var] -= 1;
        out.add_term(d, c * Rational(e[var]));
    }
    return out;
}

SparsePolynomial SparsePolynomial::substitute(
    const std::map<unsigned, SparsePolynomial>& assignment) const {
    SparsePolynomial out(genus_);
    for (const auto& [e, c] : terms_) {
        SparsePolynomial term(genus_, c);
        for (unsigned v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument(
                    "SparsePolynomial::substitute: missing assignment for occurring variable");
            for (unsigned k = 0; k < e[v]; ++k) term = term * it->second;
        }
        out = out + term;
    }
    return out;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (unsigned v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            auto [i, j] = var_pair(genus_, v);
            os << "*r" << (i + 1) << (j + 1);
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

}  // namespace siegelq
