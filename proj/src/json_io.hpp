#pragma once

#include <json.hpp>

#include "bordism.hpp"
#include "poly.hpp"

namespace apkappa {

// Insertion-ordered JSON keeps every emitted document in canonical term
// order, so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// {"system": "ph", "terms": [{"exps": [["ph1", 2], ["ph2", 1]], "coef": "num/den"}, ...]}
Json poly_to_json(const GradedPolynomial& p);
GradedPolynomial poly_from_json(const Json& j);

// {"left_system": .., "right_system": .., "terms": [{"left": [..], "right": [..], "coef": ..}]}
Json tensor_to_json(const TensorPolynomial& t);
TensorPolynomial tensor_from_json(const Json& j);

// {"dim": m, "numbers": [{"monomial": [[i, exp], ...], "value": "num/den"}, ...]}
// Emits every degree-m p-monomial (zeros included); accepts sparse input.
Json bordism_to_json(const BordismClassQ& c);
BordismClassQ bordism_from_json(const Json& j);

// "cp4", "cp2xcp2", ... products of complex projective spaces.
BordismClassQ bordism_from_shortcut(const std::string& name);

Json parse_json(const std::string& text);  // throws std::invalid_argument on bad JSON

}  // namespace apkappa
