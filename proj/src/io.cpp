#include "gfw/io.hpp"

#include <cctype>

#include "gfw/error.hpp"

namespace gfw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// One summand of a field expression, without its sign: "3/2", "t", "2t^3", "1/2*t".
void add_term(std::string_view term, bool negative, std::vector<Rational>& coeffs) {
  term = trim(term);
  if (term.empty()) throw DomainError("empty term in field expression");
  std::size_t tpos = term.find('t');
  Rational c(1);
  int e = 0;
  if (tpos == std::string_view::npos) {
    c = Rational::parse(term);
  } else {
    std::string_view head = trim(term.substr(0, tpos));
    if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
    if (!head.empty()) c = Rational::parse(head);
    std::string_view tail = trim(term.substr(tpos + 1));
    e = 1;
    if (!tail.empty()) {
      if (tail.front() != '^') throw DomainError("malformed field expression term '" + std::string(term) + "'");
      tail = trim(tail.substr(1));
      if (tail.empty() || tail.size() > 4) throw DomainError("bad exponent in '" + std::string(term) + "'");
      e = 0;
      for (char ch : tail) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw DomainError("bad exponent in '" + std::string(term) + "'");
        e = e * 10 + (ch - '0');
      }
    }
  }
  if (coeffs.size() <= static_cast<std::size_t>(e)) coeffs.resize(static_cast<std::size_t>(e) + 1);
  coeffs[static_cast<std::size_t>(e)] += negative ? -c : c;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw DomainError(std::string("unknown key '") + key + "' in " + what);
  }
}

}  // namespace

FieldPtr field_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("field modulus must be an array of rationals");
  std::vector<Rational> m;
  for (const auto& c : j) {
    if (c.is_string()) m.push_back(Rational::parse(c.get<std::string>()));
    else if (c.is_number_integer()) m.emplace_back(c.get<long>());
    else throw DomainError("field modulus entries must be \"p/q\" strings or integers");
  }
  return NumberField::create(std::move(m));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

FieldElem parse_field_elem(std::string_view text, const FieldPtr& field) {
  text = trim(text);
  if (text.empty()) throw DomainError("empty field expression");
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    start = 1;
  }
  // A sign splits terms unless it follows '/' or '^' (never valid there anyway).
  for (std::size_t i = start; i <= text.size(); ++i) {
    if (i == text.size() || ((text[i] == '+' || text[i] == '-') && i > start)) {
      add_term(text.substr(start, i - start), negative, coeffs);
      if (i == text.size()) break;
      negative = text[i] == '-';
      start = i + 1;
    }
  }
  if (field->is_rationals() && coeffs.size() > 1)
    throw DomainError("expression '" + std::string(text) + "' uses t but the field is Q");
  return FieldElem(field, std::move(coeffs));
}

Json to_json(const Rational& q) { return q.to_string(); }

Json modulus_json(const NumberField& field) {
  Json m = Json::array();
  const RatPoly& p = field.modulus();
  for (int i = 0; i <= p.degree(); ++i) m.push_back(p.coeff(i).to_string());
  return m;
}

Json to_json(const FieldElem& x) {
  if (x.is_rational()) return x.as_rational().to_string();
  return Json{{"coeffs", x.to_strings()}, {"modulus", modulus_json(*x.field())}};
}

FieldElem field_elem_from_json(const Json& j, const FieldPtr& field) {
  if (j.is_string()) return parse_field_elem(j.get<std::string>(), field);
  if (j.is_number_integer()) return FieldElem(field, Rational(j.get<long>()));
  if (j.is_array()) {
    std::vector<Rational> c;
    for (const auto& e : j) {
      if (!e.is_string() && !e.is_number_integer()) throw DomainError("coordinate entries must be rationals");
      c.push_back(e.is_string() ? Rational::parse(e.get<std::string>()) : Rational(e.get<long>()));
    }
    if (static_cast<int>(c.size()) > field->degree()) throw DomainError("too many coordinates for the field");
    return FieldElem(field, std::move(c));
  }
  if (j.is_object()) {
    check_keys(j, {"coeffs", "modulus"}, "field element");
    if (!j.contains("coeffs")) throw DomainError("field element object needs \"coeffs\"");
    FieldPtr target = field;
    if (j.contains("modulus")) {
      const FieldPtr declared = field_from_json(j.at("modulus"));
      if (!declared->same_as(*field)) {
        if (!field->is_rationals()) throw FieldMismatch();
        target = declared;
      }
    }
    return field_elem_from_json(j.at("coeffs"), target);
  }
  throw DomainError("cannot read a field element from " + j.dump());
}

Json curve_to_json(const GFCurve& curve) {
  Json j;
  j["k"] = curve.k();
  j["n"] = curve.n();
  Json l = Json::array();
  for (const auto& x : curve.lambda()) l.push_back(to_json(x));
  j["lambda"] = l;
  if (!curve.field()->is_rationals()) j["field"] = modulus_json(*curve.field());
  return j;
}

GFCurve curve_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("curve description must be a JSON object");
  check_keys(j, {"k", "n", "lambda", "field"}, "curve description");
  if (!j.contains("k") || !j.contains("n") || !j.at("k").is_number_integer() || !j.at("n").is_number_integer())
    throw DomainError("curve description needs integer \"k\" and \"n\"");
  const int k = j.at("k").get<int>();
  const int n = j.at("n").get<int>();
  const FieldPtr field = j.contains("field") ? field_from_json(j.at("field")) : NumberField::rationals();
  std::vector<FieldElem> lambda;
  if (j.contains("lambda")) {
    if (!j.at("lambda").is_array()) throw DomainError("\"lambda\" must be an array");
    for (const auto& x : j.at("lambda")) lambda.push_back(field_elem_from_json(x, field));
  }
  if (lambda.empty()) return GFCurve::validate(k, n, std::vector<Rational>{}, field);
  for (auto& x : lambda) x = x.coerce(field);
  return GFCurve::validate(k, n, std::move(lambda));
}

Json point_to_json(const PointSpec& p) {
  if (const auto* g = std::get_if<GenericFixed>(&p)) return Json{{"type", "fixed"}, {"axis", g->axis}};
  if (const auto* f = std::get_if<GenericFiber>(&p)) return Json{{"type", "fiber"}, {"value", to_json(f->c)}};
  const auto& e = std::get<Embedded>(p);
  Json coords = Json::array();
  for (const auto& x : e.coords) coords.push_back(x.is_rational() ? Json(x.as_rational().to_string()) : Json(x.to_strings()));
  Json out{{"type", "embedded"}, {"coords", coords}};
  if (!e.field->is_rationals()) out["field"] = modulus_json(*e.field);
  return out;
}

PointSpec point_from_json(const Json& j, const GFCurve& curve) {
  if (j.is_array()) return point_from_json(Json{{"type", "embedded"}, {"coords", j}}, curve);
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw DomainError("point must be an object with a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "fixed") {
    check_keys(j, {"type", "axis"}, "fixed point");
    if (!j.contains("axis") || !j.at("axis").is_number_integer()) throw DomainError("fixed point needs \"axis\"");
    const int axis = j.at("axis").get<int>();
    if (axis < 0 || axis > curve.n()) throw DomainError("axis out of range");
    return GenericFixed{axis};
  }
  if (type == "fiber") {
    check_keys(j, {"type", "value"}, "fibre");
    return GenericFiber{field_elem_from_json(j.at("value"), curve.field())};
  }
  if (type == "embedded") {
    check_keys(j, {"type", "coords", "field"}, "embedded point");
    FieldPtr field = curve.field();
    if (j.contains("field")) {
      const FieldPtr declared = field_from_json(j.at("field"));
      if (!declared->same_as(*field)) {
        if (!field->is_rationals()) throw FieldMismatch();
        field = declared;
      }
    }
    if (!j.contains("coords") || !j.at("coords").is_array()) throw DomainError("embedded point needs \"coords\"");
    std::vector<FieldElem> coords;
    for (const auto& x : j.at("coords")) coords.push_back(field_elem_from_json(x, field));
    return make_embedded(curve, std::move(coords));
  }
  throw DomainError("unknown point type '" + type + "'");
}

PointSpec parse_point(std::string_view text, const GFCurve& curve) {
  text = trim(text);
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw DomainError(std::string("malformed point JSON: ") + e.what());
    }
    return point_from_json(j, curve);
  }
  std::vector<FieldElem> coords;
  for (auto part : split(text, ',')) coords.push_back(parse_field_elem(part, curve.field()));
  return make_embedded(curve, std::move(coords));
}

}  // namespace gfw
