#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "polyzeta/identify.hpp"

namespace polyzeta {

using json = nlohmann::ordered_json;

// Words are strings ("001", "2,1"), symbols likewise ("gamma", "S[001]", "Sigma[2,1]").
// A polynomial is a list of {"coeff": "p/q", ...} terms in the container's order.
json to_json(const Word& w);
json to_json(const Symbol& s);
json to_json(const Monomial& m);  // [["Sigma[2]", 2], ...]
json to_json(const CPoly& p);     // [{"coeff": "3/2", "monomial": [...]}]
json to_json(const RationalPoly& p);  // [{"coeff": "1/2", "word": "3"}]
json to_json(const Rule& r);      // {"lhs": ..., "rhs": ..., "weight": k}
json to_json(const LyndonExpansion& e);

Word word_from_json(Alphabet a, const json& j);
Symbol symbol_from_json(const json& j);
CPoly cpoly_from_json(const json& j);
RationalPoly rational_poly_from_json(Alphabet a, const json& j);
Rule rule_from_json(const json& j);

// {"side": "y", "max_weight": p, "weights": [{"weight", "rules", "irreducibles"}...],
//  "rules": n, "irreducibles": [...]}
json relations_json(const Identification& id, Alphabet side);

// Table in the layout of the rewriting examples: one block per weight, one rule per line,
// both sides next to each other when both are requested; irreducibles listed below.
std::string relations_text(const Identification& id, const std::vector<Alphabet>& sides);

}  // namespace polyzeta
