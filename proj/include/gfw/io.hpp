#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gfw/charts.hpp"
#include "gfw/curve.hpp"

namespace gfw {

using Json = nlohmann::json;

/// Comma-separated rationals, e.g. "-1,2,1/3". Empty text gives an empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Polynomial expression in the field generator t with rational coefficients,
/// e.g. "-t", "1/2 + 3t^2", "2*t - 1". Reduced modulo the field modulus.
FieldElem parse_field_elem(std::string_view text, const FieldPtr& field);

/// Rationals become "p/q" strings; other elements an object with the
/// power-basis coordinates and the modulus, both ascending.
Json to_json(const Rational& q);
Json to_json(const FieldElem& x);
Json modulus_json(const NumberField& field);
/// Field from a modulus coefficient list (ascending).
FieldPtr field_from_json(const Json& j);

/// Accepts "p/q" strings, expression strings, integers, coordinate arrays or
/// the object form. Objects must name the same modulus as `field`.
FieldElem field_elem_from_json(const Json& j, const FieldPtr& field);

/// {"k", "n", "lambda", "field"}; "field" is omitted over Q.
Json curve_to_json(const GFCurve& curve);
GFCurve curve_from_json(const Json& j);

/// {"type": "fixed", "axis": a}, {"type": "fiber", "value": c} or
/// {"type": "embedded", "coords": [...]}. A bare array is read as coords.
Json point_to_json(const PointSpec& p);
PointSpec point_from_json(const Json& j, const GFCurve& curve);

/// "1,1,-t,0": coordinates as field expressions.
PointSpec parse_point(std::string_view text, const GFCurve& curve);

}  // namespace gfw
