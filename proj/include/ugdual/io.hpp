#pragma once

#include <string>

#include <json.hpp>

#include "ugdual/functional.hpp"
#include "ugdual/group.hpp"
#include "ugdual/kacmoody.hpp"
#include "ugdual/multipoly.hpp"

/// JSON encodings. Every parser throws SchemaError naming the offending field
/// path (e.g. "letters[1].matrix[0][2]").
namespace ugdual::io {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& field);

json to_json(const Vector& v);
Vector vector_from_json(const json& j, std::size_t dim, const std::string& field);

Word word_from_json(const Alphabet& a, const json& j, const std::string& field);

/// [{name, kind}].
json to_json(const Alphabet& a);
Alphabet alphabet_from_json(const json& j, const std::string& field);
/// "e1,e2,h:diagonalizable-integer"; kinds default to locally nilpotent.
Alphabet alphabet_from_spec(const std::string& spec);

/// [{word, coeff}] in shortlex order.
json to_json(const Alphabet& a, const NcPoly& p);
NcPoly ncpoly_from_json(const Alphabet& a, const json& j, const std::string& field);

/// [{left, right, coeff}].
json to_json(const Alphabet& a, const TensorNcPoly& t);

/// {dim, letters: [{name, kind, matrix}], labels?}.
json to_json(const RepSpec& r);
RepSpec rep_from_json(const json& j, const std::string& field);

/// {kind: "finite", terms} or {kind: "matrix-coefficient", rep, phi, v}.
json to_json(const Alphabet& a, const Functional& h);
Functional functional_from_json(const Alphabet& a, const json& j, const std::string& field);

/// {tuple: [names], coeffs: [{k, c}]} sorted by k.
json to_json(const Alphabet& a, const RhoExpansion& e);
RhoExpansion rho_from_json(const Alphabet& a, const json& j, const std::string& field);

/// [{letter, kind: "exp"|"torus", param}], leftmost first.
json to_json(const Alphabet& a, const GroupWord& g);
GroupWord group_word_from_json(const Alphabet& a, const json& j, const std::string& field);

json to_json(const Alphabet& a, const Witness& w);
json to_json(const FfrMembership& m);
json to_json(const Alphabet& a, const RegularityCertificate& c);

/// {matrix, coweights?}.
json to_json(const km::Gcm& g);
km::Gcm gcm_from_json(const json& j, const std::string& field);
std::vector<long> weight_from_json(const json& j, std::size_t n, const std::string& field);

/// [{gen: "e1"|"f1", param}, {root: [1,2], param}, {torus: [c...], extra?, param}];
/// indices are 1-based.
json to_json(const km::KMGroupWord& g);
km::KMGroupWord km_group_word_from_json(const km::Gcm& gcm, const json& j, const std::string& field);

/// [{depth: [ints], coords: ["p/q"]}].
json to_json(const km::WeightVector& v);
km::WeightVector weight_vector_from_json(const km::IrrTrunc& m, const json& j, const std::string& field);

json to_json(const km::RelationReport& r);

/// Parses text as JSON, reporting syntax errors as SchemaError at `field`.
json parse_text(const std::string& text, const std::string& field);

}  // namespace ugdual::io
