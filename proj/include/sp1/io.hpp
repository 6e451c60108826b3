#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sp1/gamma.hpp"
#include "sp1/gflow.hpp"
#include "sp1/newton.hpp"
#include "sp1/pline.hpp"
#include "sp1/topo.hpp"
#include "sp1/tree.hpp"
#include "sp1/trop.hpp"
#include "sp1/valfield.hpp"

// JSON encodings. Objects use std::map storage so keys are emitted sorted;
// rationals are canonical "p" or "p/q" strings, ∞ is "inf". Every parser
// throws ParseError on malformed input.
namespace sp1::io {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);

GammaValue gamma_from_json(const Json& j);
Json to_json(const GammaValue& g);

FieldSpec field_from_json(const Json& j);
Json to_json(const FieldSpec& spec);

/// "p/q" strings, integers, or {"num": [...], "den": [...]} with
/// coefficients listed from the constant term up (t-adic only).
FieldElem elem_from_json(const Json& j, const FieldSpec& spec);
Json to_json(const FieldElem& a);

/// "inf", a field element (simple point), or {"chart", "center", "radius"}.
/// The result is normalized.
PLinePoint point_from_json(const Json& j, const FieldSpec& spec);
Json to_json(const PLinePoint& p);

Poly poly_from_json(const Json& j, const FieldSpec& spec);
Json to_json(const Poly& p);

BiPoly bipoly_from_json(const Json& j, const FieldSpec& spec);

/// [[exponent list], coefficient] pairs.
MPoly mpoly_from_json(const Json& j, const FieldSpec& spec);

Json to_json(const FiniteMetricTree& t);
FiniteMetricTree tree_from_json(const Json& j, const FieldSpec& spec);

Json to_json(const Affine& a);
Json to_json(const RootProfile& p);
RootProfile profile_from_json(const Json& j);

Json to_json(const TropPoint& p);
TropPoint trop_from_json(const Json& j);

/// {"coeffs": {name: rational}, "c": rational} over the coordinate list.
Functional functional_from_json(const Json& j, const std::vector<std::string>& coords);
Json to_json(const Functional& f, const std::vector<std::string>& coords);

Json to_json(const FlowResult& r, const std::vector<std::string>& coords);
FlowResult flow_result_from_json(const Json& j, const std::vector<std::string>& coords);

Json to_json(const Fingerprint& f);
Json to_json(const FamilySweep& s);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace sp1::io
