#ifndef SIEGELQ_IO_HPP
#define SIEGELQ_IO_HPP

#include <string>
#include <variant>

#include "json.hpp"
#include "siegelq/derham.hpp"
#include "siegelq/nearcalc.hpp"
#include "siegelq/padic.hpp"
#include "siegelq/qseries.hpp"

namespace siegelq::io {

using json = nlohmann::json;

// JSON interchange.  Objects use sorted keys and terms appear in the
// canonical (lexicographic on doubled matrix) order, so serialization is
// deterministic and diff-friendly.  Unknown fields are rejected.

json to_json(const QExpansion<Rational>& f);
json to_json(const PolyQExpansion& f);
json to_json(const PAdicQExpansion& f);
json to_json(const DeRhamQExpansion& f);
json to_json(const QExpansion<SymPoly<Rational>>& f);
json to_json(const SymValuedExpansion& f);

QExpansion<Rational> rational_expansion_from_json(const json& j);
PolyQExpansion poly_expansion_from_json(const json& j);
PAdicQExpansion residue_expansion_from_json(const json& j);
DeRhamQExpansion derham_expansion_from_json(const json& j);
QExpansion<SymPoly<Rational>> sym_rational_expansion_from_json(const json& j);
SymValuedExpansion sym_poly_expansion_from_json(const json& j);

using AnyExpansion =
    std::variant<QExpansion<Rational>, PolyQExpansion, PAdicQExpansion,
                 DeRhamQExpansion, QExpansion<SymPoly<Rational>>, SymValuedExpansion>;

/// Parse any interchange document, dispatching on its "ring" field.
AnyExpansion expansion_from_json(const json& j);

/// The ring tag stored in a document produced by to_json.
std::string ring_name(const AnyExpansion& f);

std::string dump(const json& j);
json parse(const std::string& text);  // throws std::runtime_error with position info

}  // namespace siegelq::io

#endif
