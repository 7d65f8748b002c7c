#include "siegelq/io.hpp"

#include <set>
#include <stdexcept>

namespace siegelq::io {

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
    if (!j.is_object()) throw std::invalid_argument("siegelq json: " + where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k))
            throw std::invalid_argument("siegelq json: unknown field '" + k + "' in " + where);
}

json matrix_to_json(const HalfIntegralMatrix& T) {
    json rows = json::array();
    for (unsigned i = 0; i < T.genus(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < T.genus(); ++j) row.push_back(T.doubled(i, j));
        rows.push_back(row);
    }
    return rows;
}

HalfIntegralMatrix matrix_from_json(const json& j, unsigned genus) {
    if (!j.is_array() || j.size() != genus)
        throw std::invalid_argument("siegelq json: S must be a genus x genus array");
    std::vector<long> s;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != genus)
            throw std::invalid_argument("siegelq json: S row has wrong length");
        for (const auto& v : row) s.push_back(v.get<long>());
    }
    return HalfIntegralMatrix(genus, std::move(s));
}

json rational_to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("siegelq json: rational must be a string");
    return rational_from_string(j.get<std::string>());
}

json poly_to_json(const SparsePolynomial& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        json ev = json::array();
        for (unsigned x : e) ev.push_back(x);
        out.push_back(json::array({ev, c.get_num().get_str(), c.get_den().get_str()}));
    }
    return out;
}

SparsePolynomial poly_from_json(const json& j, unsigned genus) {
    if (!j.is_array()) throw std::invalid_argument("siegelq json: polynomial must be an array");
    SparsePolynomial p(genus);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument(
                "siegelq json: polynomial term must be [exponents, num, den]");
        SparsePolynomial::Exponents e;
        for (const auto& x : t[0]) e.push_back(x.get<unsigned>());
        Rational c(rational_from_string(t[1].get<std::string>()));
        c /= rational_from_string(t[2].get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

const std::set<std::string> kTopKeys = {
    "format", "version", "genus", "level", "trace_bound", "weight",
    "ring",   "p",       "m",     "tensor_degree", "sym_degree", "terms", "header"};

json base_json(unsigned genus, unsigned level, long trace_bound,
               const std::optional<Rational>& weight, const std::string& ring) {
    json j;
    j["format"] = "siegelq-qexp";
    j["version"] = 1;
    j["genus"] = genus;
    j["level"] = level;
    j["trace_bound"] = trace_bound;
    j["weight"] = weight ? json(weight->get_str()) : json(nullptr);
    j["ring"] = ring;
    return j;
}

struct Meta {
    unsigned genus;
    unsigned level;
    long trace_bound;
    std::optional<Rational> weight;
};

Meta meta_from_json(const json& j, const std::string& expect_ring) {
    check_keys(j, kTopKeys, "expansion");
    if (j.at("format").get<std::string>() != "siegelq-qexp")
        throw std::invalid_argument("siegelq json: unknown format tag");
    if (j.at("ring").get<std::string>() != expect_ring)
        throw std::invalid_argument("siegelq json: expected ring '" + expect_ring +
                                    "', found '" + j.at("ring").get<std::string>() + "'");
    Meta m;
    m.genus = j.at("genus").get<unsigned>();
    m.level = j.at("level").get<unsigned>();
    m.trace_bound = j.at("trace_bound").get<long>();
    if (!j.at("weight").is_null())
        m.weight = rational_from_string(j.at("weight").get<std::string>());
    return m;
}

template <class C, class Enc>
json terms_to_json(const QExpansion<C>& f, Enc&& encode) {
    json terms = json::array();
    for (const auto& [T, c] : f.terms()) {
        json t;
        t["S"] = matrix_to_json(T);
        t["coeff"] = encode(c);
        terms.push_back(t);
    }
    return terms;
}

template <class C, class Dec>
void terms_from_json(const json& j, QExpansion<C>& f, Dec&& decode) {
    if (!j.is_array()) throw std::invalid_argument("siegelq json: terms must be an array");
    for (const auto& t : j) {
        check_keys(t, {"S", "coeff"}, "term");
        HalfIntegralMatrix T = matrix_from_json(t.at("S"), f.genus());
        f.add_coefficient(T, decode(t.at("coeff")));
    }
}

template <class C>
json sympoly_to_json(const SymPoly<C>& v, json (*enc)(const C&)) {
    json out = json::array();
    for (const auto& [alpha, c] : v.terms()) {
        json av = json::array();
        for (unsigned x : alpha) av.push_back(x);
        out.push_back(json::array({av, enc(c)}));
    }
    return out;
}

json poly_enc(const SparsePolynomial& p) { return poly_to_json(p); }
json rat_enc(const Rational& r) { return rational_to_json(r); }

template <class C, class Dec>
SymPoly<C> sympoly_from_json(const json& j, unsigned genus, unsigned degree,
                             const C& zero, Dec&& decode) {
    SymPoly<C> v(genus, degree, zero);
    if (!j.is_array())
        throw std::invalid_argument("siegelq json: sym coefficient must be an array");
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("siegelq json: sym term must be [slots, coeff]");
        std::vector<unsigned> alpha;
        for (const auto& x : t[0]) alpha.push_back(x.get<unsigned>());
        v.add_term(alpha, decode(t[1]));
    }
    return v;
}

std::string derham_index_name(unsigned genus, unsigned e) {
    if (e < genus) return "w" + std::to_string(e + 1);
    return "n" + std::to_string(e - genus + 1);
}

unsigned derham_index_parse(unsigned genus, const std::string& s) {
    if (s.size() < 2 || (s[0] != 'w' && s[0] != 'n'))
        throw std::invalid_argument("siegelq json: bad de Rham index '" + s + "'");
    unsigned k = static_cast<unsigned>(std::stoul(s.substr(1)));
    if (k < 1 || k > genus)
        throw std::invalid_argument("siegelq json: de Rham index out of range '" + s + "'");
    return s[0] == 'w' ? k - 1 : genus + k - 1;
}

}  // namespace

json to_json(const QExpansion<Rational>& f) {
    json j = base_json(f.genus(), f.level(), f.trace_bound(), f.weight(), "rational");
    j["terms"] = terms_to_json(f, [](const Rational& c) { return rational_to_json(c); });
    return j;
}

json to_json(const PolyQExpansion& f) {
    json j = base_json(f.genus(), f.level(), f.trace_bound(), f.weight(), "poly");
    j["terms"] = terms_to_json(f, [](const SparsePolynomial& c) { return poly_to_json(c); });
    return j;
}

json to_json(const PAdicQExpansion& f) {
    json j = base_json(f.genus(), f.level(), f.trace_bound(), f.weight(), "residue");
    j["p"] = f.zero_coeff().prime().get_str();
    j["m"] = f.zero_coeff().precision();
    j["terms"] =
        terms_to_json(f, [](const ResidueCoeff& c) { return json(c.value().get_str()); });
    return j;
}

json to_json(const DeRhamQExpansion& f) {
    json j = base_json(f.genus(), f.level(), f.trace_bound(), f.weight(), "derham");
    const unsigned g = f.genus();
    j["tensor_degree"] = f.zero_coeff().tensor_degree();
    j["terms"] = terms_to_json(f, [g](const DeRhamCoefficient& v) {
        json out = json::array();
        for (const auto& [idx, poly] : v.terms()) {
            json names = json::array();
            for (unsigned e : idx) names.push_back(derham_index_name(g, e));
            out.push_back(json::array({names, poly_to_json(poly)}));
        }
        return out;
    });
    return j;
}

json to_json(const QExpansion<SymPoly<Rational>>& f) {
    json j = base_json(f.genus(), f.level(), f.trace_bound(), f.weight(), "sym-rational");
    j["sym_degree"] = f.zero_coeff().degree();
    j["terms"] = terms_to_json(
        f, [](const SymPoly<Rational>& v) { return sympoly_to_json(v, rat_enc); });
    return j;
}

json to_json(const SymValuedExpansion& f) {
    json j = base_json(f.genus(), f.level(), f.trace_bound(), f.weight(), "sym-poly");
    j["sym_degree"] = f.zero_coeff().degree();
    j["terms"] = terms_to_json(
        f, [](const SymPoly<SparsePolynomial>& v) { return sympoly_to_json(v, poly_enc); });
    return j;
}

QExpansion<Rational> rational_expansion_from_json(const json& j) {
    Meta m = meta_from_json(j, "rational");
    QExpansion<Rational> f(m.genus, m.level, m.trace_bound, m.weight, Rational(0));
    terms_from_json(j.at("terms"), f, [](const json& c) { return rational_from_json(c); });
    return f;
}

PolyQExpansion poly_expansion_from_json(const json& j) {
    Meta m = meta_from_json(j, "poly");
    PolyQExpansion f = poly_qexpansion(m.genus, m.level, m.trace_bound, m.weight);
    const unsigned g = m.genus;
    terms_from_json(j.at("terms"), f, [g](const json& c) { return poly_from_json(c, g); });
    return f;
}

PAdicQExpansion residue_expansion_from_json(const json& j) {
    Meta m = meta_from_json(j, "residue");
    Integer p(j.at("p").get<std::string>());
    unsigned prec = j.at("m").get<unsigned>();
    PAdicQExpansion f(m.genus, m.level, m.trace_bound, m.weight, ResidueCoeff(p, prec));
    terms_from_json(j.at("terms"), f, [&](const json& c) {
        return ResidueCoeff(p, prec, Integer(c.get<std::string>()));
    });
    return f;
}

DeRhamQExpansion derham_expansion_from_json(const json& j) {
    Meta m = meta_from_json(j, "derham");
    const unsigned deg = j.at("tensor_degree").get<unsigned>();
    DeRhamQExpansion f = derham_qexpansion(m.genus, m.level, m.trace_bound, deg, m.weight);
    const unsigned g = m.genus;
    terms_from_json(j.at("terms"), f, [g, deg](const json& c) {
        DeRhamCoefficient v(g, deg);
        if (!c.is_array())
            throw std::invalid_argument("siegelq json: de Rham coefficient must be an array");
        for (const auto& t : c) {
            if (!t.is_array() || t.size() != 2)
                throw std::invalid_argument("siegelq json: de Rham term must be [index, poly]");
            DeRhamCoefficient::Index idx;
            for (const auto& s : t[0]) idx.push_back(derham_index_parse(g, s.get<std::string>()));
            v.add_term(idx, poly_from_json(t[1], g));
        }
        return v;
    });
    return f;
}

QExpansion<SymPoly<Rational>> sym_rational_expansion_from_json(const json& j) {
    Meta m = meta_from_json(j, "sym-rational");
    const unsigned e = j.at("sym_degree").get<unsigned>();
    SymPoly<Rational> zero(m.genus, e, Rational(0));
    QExpansion<SymPoly<Rational>> f(m.genus, m.level, m.trace_bound, m.weight, zero);
    terms_from_json(j.at("terms"), f, [&](const json& c) {
        return sympoly_from_json(c, m.genus, e, Rational(0),
                                 [](const json& x) { return rational_from_json(x); });
    });
    return f;
}

SymValuedExpansion sym_poly_expansion_from_json(const json& j) {
    Meta m = meta_from_json(j, "sym-poly");
    const unsigned e = j.at("sym_degree").get<unsigned>();
    SymPoly<SparsePolynomial> zero(m.genus, e, SparsePolynomial(m.genus));
    SymValuedExpansion f(m.genus, m.level, m.trace_bound, m.weight, zero);
    terms_from_json(j.at("terms"), f, [&](const json& c) {
        return sympoly_from_json(c, m.genus, e, SparsePolynomial(m.genus),
                                 [&](const json& x) { return poly_from_json(x, m.genus); });
    });
    return f;
}

AnyExpansion expansion_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ring"))
        throw std::invalid_argument("siegelq json: missing ring field");
    const std::string ring = j.at("ring").get<std::string>();
    if (ring == "rational") return rational_expansion_from_json(j);
    if (ring == "poly") return poly_expansion_from_json(j);
    if (ring == "residue") return residue_expansion_from_json(j);
    if (ring == "derham") return derham_expansion_from_json(j);
    if (ring == "sym-rational") return sym_rational_expansion_from_json(j);
    if (ring == "sym-poly") return sym_poly_expansion_from_json(j);
    throw std::invalid_argument("siegelq json: unknown ring '" + ring + "'");
}

std::string ring_name(const AnyExpansion& f) {
    switch (f.index()) {
        case 0: return "rational";
        case 1: return "poly";
        case 2: return "residue";
        case 3: return "derham";
        case 4: return "sym-rational";
        default: return "sym-poly";
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("siegelq json: parse error at byte ") +
                                 std::to_string(e.byte) + ": " + e.what());
    }
}

}  // namespace siegelq::io
