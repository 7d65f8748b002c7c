// siegelq: exact computation with truncated Fourier expansions of Siegel
// modular forms.  One operation per invocation; composition via files/pipes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "siegelq/derham.hpp"
#include "siegelq/eisenstein.hpp"
#include "siegelq/io.hpp"
#include "siegelq/nearcalc.hpp"
#include "siegelq/padic.hpp"
#include "siegelq/weights.hpp"

namespace {

using namespace siegelq;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

io::AnyExpansion load_any(const std::string& path) {
    return io::expansion_from_json(io::parse(read_input(path)));
}

unsigned env_threads() {
    const char* v = std::getenv("SIEGELQ_THREADS");
    if (!v) return 1;
    const long n = std::strtol(v, nullptr, 10);
    return n > 0 ? static_cast<unsigned>(n) : 1;
}

std::vector<long> parse_kappa(const std::string& s) {
    std::vector<long> kappa;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) kappa.push_back(std::stol(item));
    return kappa;
}

PolyQExpansion as_poly(io::AnyExpansion&& any) {
    if (auto* p = std::get_if<PolyQExpansion>(&any)) return std::move(*p);
    if (auto* r = std::get_if<QExpansion<Rational>>(&any)) return lift_to_poly(*r);
    throw std::domain_error("expected an expansion with rational or polynomial coefficients");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"siegelq: exact Siegel modular form q-expansion calculator"};
    app.require_subcommand(1);

    std::string in_path, in_path2, out_path;
    long weight = 0, s_param = 0, prec = 20, max_trace = 2;
    unsigned genus = 1, e_param = 1, m_param = 1;
    std::string p_str = "5", kappa_str, dim_type = "gl";
    Rational c1(1), c2(1);
    std::string c1_str = "1", c2_str = "1";

    auto* eis = app.add_subcommand("eis", "generate a genus-1 Eisenstein series");
    eis->add_option("--genus", genus, "degree (only 1 is generated)");
    eis->add_option("--weight", weight, "even weight >= 4")->required();
    eis->add_option("--prec", prec, "trace bound");
    eis->add_option("-o,--out", out_path, "output file");

    auto* ladder = app.add_subcommand("ladder", "nearly holomorphic Eisenstein ladder");
    ladder->add_option("--weight", weight)->required();
    ladder->add_option("--s", s_param, "nonpositive ladder depth")->required();
    ladder->add_option("--prec", prec);
    ladder->add_option("-o,--out", out_path);

    auto* delta = app.add_subcommand("delta", "apply the Maass-Shimura operator delta_h");
    delta->add_option("--weight", weight)->required();
    delta->add_option("-i,--in", in_path);
    delta->add_option("-o,--out", out_path);

    auto* theta = app.add_subcommand("theta", "apply the theta operator a(T) -> a(T) det(T/N)");
    theta->add_option("-i,--in", in_path);
    theta->add_option("-o,--out", out_path);

    auto* dp = app.add_subcommand("dp", "apply the p-adic derivation symbol (tr(Tu)/N)^e");
    dp->add_option("--e", e_param, "iteration count");
    dp->add_option("-i,--in", in_path);
    dp->add_option("-o,--out", out_path);

    auto* mul = app.add_subcommand("mul", "multiply two expansions");
    mul->add_option("a", in_path, "first operand")->required();
    mul->add_option("b", in_path2, "second operand")->required();
    mul->add_option("-o,--out", out_path);

    auto* addc = app.add_subcommand("add", "linear combination c1*a + c2*b");
    addc->add_option("a", in_path)->required();
    addc->add_option("b", in_path2)->required();
    addc->add_option("--c1", c1_str, "scalar for a");
    addc->add_option("--c2", c2_str, "scalar for b");
    addc->add_option("-o,--out", out_path);

    auto* phi = app.add_subcommand("phi", "Hodge realization of a de Rham expansion");
    phi->add_option("-i,--in", in_path);
    phi->add_option("-o,--out", out_path);

    auto* realize = app.add_subcommand(
        "realize", "p-adic realization: r -> 0 (poly) or unit-root projection (derham)");
    realize->add_option("-i,--in", in_path);
    realize->add_option("-o,--out", out_path);

    auto* congr = app.add_subcommand("congr", "congruence check mod p^m");
    congr->add_option("a", in_path)->required();
    congr->add_option("b", in_path2)->required();
    congr->add_option("--p", p_str)->required();
    congr->add_option("--m", m_param);
    congr->add_option("-o,--out", out_path);

    auto* gate = app.add_subcommand("gate", "q-expansion integrality gate at p");
    gate->add_option("--p", p_str)->required();
    gate->add_option("-i,--in", in_path);
    gate->add_option("-o,--out", out_path);

    auto* enumt = app.add_subcommand("enum-T", "enumerate PSD half-integral matrices");
    enumt->add_option("--genus", genus)->required();
    enumt->add_option("--max-trace", max_trace)->required();
    enumt->add_option("-o,--out", out_path);

    auto* dim = app.add_subcommand("dim", "Weyl dimension of a dominant weight");
    dim->add_option("--type", dim_type, "gl or sp");
    dim->add_option("--kappa", kappa_str, "comma-separated weight")->required();
    dim->add_option("-o,--out", out_path);

    auto* validate = app.add_subcommand("validate", "validate a coefficient table file");
    validate->add_option("file", in_path)->required();

    auto* contract_cmd = app.add_subcommand(
        "contract", "det-polarized contraction of a sym-valued expansion");
    contract_cmd->add_option("-i,--in", in_path);
    contract_cmd->add_option("-o,--out", out_path);

    auto* dcmd = app.add_subcommand("D", "Shimura operator D for scalar weight h");
    dcmd->add_option("--weight", weight)->required();
    dcmd->add_option("-i,--in", in_path);
    dcmd->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*eis) {
            if (genus != 1) throw std::domain_error("eis: only genus 1 is generated");
            if (weight < 4 || weight % 2 != 0)
                throw std::domain_error("eis: weight must be even >= 4");
            write_output(out_path, io::dump(io::to_json(eisenstein_q(weight, prec))));
        } else if (*ladder) {
            write_output(out_path,
                         io::dump(io::to_json(nearly_eisenstein(weight, s_param, prec))));
        } else if (*delta) {
            PolyQExpansion f = as_poly(load_any(in_path));
            write_output(out_path, io::dump(io::to_json(maass_delta(f, Rational(weight)))));
        } else if (*theta) {
            io::AnyExpansion any = load_any(in_path);
            if (auto* r = std::get_if<QExpansion<Rational>>(&any))
                write_output(out_path, io::dump(io::to_json(theta_op(*r))));
            else if (auto* p = std::get_if<PolyQExpansion>(&any))
                write_output(out_path, io::dump(io::to_json(theta_op(*p))));
            else if (auto* q = std::get_if<PAdicQExpansion>(&any))
                write_output(out_path, io::dump(io::to_json(theta_op(*q))));
            else
                throw std::domain_error("theta: unsupported coefficient ring");
        } else if (*dp) {
            io::AnyExpansion any = load_any(in_path);
            if (auto* r = std::get_if<QExpansion<Rational>>(&any))
                write_output(out_path, io::dump(io::to_json(dp_operator(*r, e_param))));
            else if (auto* p = std::get_if<PolyQExpansion>(&any))
                write_output(out_path, io::dump(io::to_json(dp_operator(*p, e_param))));
            else
                throw std::domain_error("dp: unsupported coefficient ring");
        } else if (*mul) {
            io::AnyExpansion a = load_any(in_path);
            io::AnyExpansion b = load_any(in_path2);
            const unsigned threads = env_threads();
            if (a.index() != b.index())
                throw std::domain_error("mul: operands have different coefficient rings");
            if (auto* r = std::get_if<QExpansion<Rational>>(&a))
                write_output(out_path, io::dump(io::to_json(qexp_mul(
                                           *r, std::get<QExpansion<Rational>>(b), threads))));
            else if (auto* p = std::get_if<PolyQExpansion>(&a))
                write_output(out_path, io::dump(io::to_json(qexp_mul(
                                           *p, std::get<PolyQExpansion>(b), threads))));
            else if (auto* q = std::get_if<PAdicQExpansion>(&a))
                write_output(out_path, io::dump(io::to_json(qexp_mul(
                                           *q, std::get<PAdicQExpansion>(b), threads))));
            else
                throw std::domain_error("mul: unsupported coefficient ring");
        } else if (*addc) {
            c1 = rational_from_string(c1_str);
            c2 = rational_from_string(c2_str);
            io::AnyExpansion a = load_any(in_path);
            io::AnyExpansion b = load_any(in_path2);
            if (a.index() != b.index())
                throw std::domain_error("add: operands have different coefficient rings");
            if (auto* r = std::get_if<QExpansion<Rational>>(&a))
                write_output(out_path, io::dump(io::to_json(qexp_add(
                                           *r, std::get<QExpansion<Rational>>(b), c1, c2))));
            else if (auto* p = std::get_if<PolyQExpansion>(&a))
                write_output(out_path, io::dump(io::to_json(qexp_add(
                                           *p, std::get<PolyQExpansion>(b), c1, c2))));
            else
                throw std::domain_error("add: unsupported coefficient ring");
        } else if (*phi) {
            auto F = io::derham_expansion_from_json(io::parse(read_input(in_path)));
            write_output(out_path, io::dump(io::to_json(phi_realize(F))));
        } else if (*realize) {
            io::AnyExpansion any = load_any(in_path);
            if (auto* p = std::get_if<PolyQExpansion>(&any))
                write_output(out_path, io::dump(io::to_json(padic_realize(*p))));
            else if (auto* d = std::get_if<DeRhamQExpansion>(&any))
                write_output(out_path, io::dump(io::to_json(unit_root_realize(*d))));
            else
                throw std::domain_error("realize: expected poly or derham coefficients");
        } else if (*congr) {
            auto f = io::rational_expansion_from_json(io::parse(read_input(in_path)));
            auto g = io::rational_expansion_from_json(io::parse(read_input(in_path2)));
            CongruenceResult r = congruence_check(f, g, Integer(p_str), m_param);
            io::json j;
            j["equal"] = r.equal;
            if (r.witness_T) {
                io::json rows = io::json::array();
                for (unsigned i = 0; i < r.witness_T->genus(); ++i) {
                    io::json row = io::json::array();
                    for (unsigned k = 0; k < r.witness_T->genus(); ++k)
                        row.push_back(r.witness_T->doubled(i, k));
                    rows.push_back(row);
                }
                j["witness_S"] = rows;
            }
            write_output(out_path, io::dump(j));
        } else if (*gate) {
            io::AnyExpansion any = load_any(in_path);
            GateResult r;
            if (auto* f = std::get_if<QExpansion<Rational>>(&any))
                r = integrality_gate(*f, Integer(p_str));
            else if (auto* f = std::get_if<PolyQExpansion>(&any))
                r = integrality_gate(*f, Integer(p_str));
            else
                throw std::domain_error("gate: expected rational or poly coefficients");
            io::json j;
            j["integral"] = r.ok;
            if (!r.ok) {
                io::json rows = io::json::array();
                for (unsigned i = 0; i < r.witness_T->genus(); ++i) {
                    io::json row = io::json::array();
                    for (unsigned k = 0; k < r.witness_T->genus(); ++k)
                        row.push_back(r.witness_T->doubled(i, k));
                    rows.push_back(row);
                }
                j["witness_S"] = rows;
                j["witness_coeff"] = r.witness_coeff.get_str();
                if (r.witness_monomial) {
                    io::json mono = io::json::array();
                    for (unsigned x : *r.witness_monomial) mono.push_back(x);
                    j["witness_monomial"] = mono;
                }
            }
            write_output(out_path, io::dump(j));
        } else if (*enumt) {
            auto mats = enumerate_psd(genus, max_trace);
            io::json arr = io::json::array();
            for (const auto& T : mats) {
                io::json rows = io::json::array();
                for (unsigned i = 0; i < genus; ++i) {
                    io::json row = io::json::array();
                    for (unsigned k = 0; k < genus; ++k) row.push_back(T.doubled(i, k));
                    rows.push_back(row);
                }
                arr.push_back(rows);
            }
            io::json j;
            j["count"] = mats.size();
            j["matrices_S"] = arr;
            write_output(out_path, io::dump(j));
        } else if (*dim) {
            auto kappa = parse_kappa(kappa_str);
            Integer d = dim_type == "sp" ? dim_sp(kappa) : dim_gl(kappa);
            write_output(out_path, d.get_str() + "\n");
        } else if (*validate) {
            auto f = load_coefficient_table(in_path);
            io::json j;
            j["valid"] = true;
            j["genus"] = f.genus();
            j["terms"] = f.terms().size();
            write_output(out_path, io::dump(j));
        } else if (*contract_cmd) {
            io::AnyExpansion any = load_any(in_path);
            if (auto* f = std::get_if<QExpansion<SymPoly<Rational>>>(&any)) {
                const auto det = det_sym_poly(f->genus());
                QExpansion<Rational> out(f->genus(), f->level(), f->trace_bound(),
                                         f->weight(), Rational(0));
                for (const auto& [T, v] : f->terms())
                    out.add_coefficient(T, contract(v, det));
                write_output(out_path, io::dump(io::to_json(out)));
            } else if (auto* f = std::get_if<SymValuedExpansion>(&any)) {
                const auto det = det_sym_poly(f->genus());
                PolyQExpansion out = poly_qexpansion(f->genus(), f->level(),
                                                     f->trace_bound(), f->weight());
                for (const auto& [T, v] : f->terms())
                    out.add_coefficient(T, contract(v, det));
                write_output(out_path, io::dump(io::to_json(out)));
            } else {
                throw std::domain_error("contract: expected a sym-valued expansion");
            }
        } else if (*dcmd) {
            PolyQExpansion f = as_poly(load_any(in_path));
            write_output(out_path, io::dump(io::to_json(shimura_D(f, weight))));
        }
    } catch (const std::exception& e) {
        std::cerr << "siegelq: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
