#include "sp1/io.hpp"

#include "sp1/errors.hpp"

namespace sp1::io {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

QPoly qpoly_from_json(const Json& j) {
  QPoly p;
  for (const auto& c : array_of(j, "polynomial coefficients")) p.push_back(rational_from_json(c));
  return p;
}

Json qpoly_to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

Chart chart_from_json(const Json& j) {
  if (j == "std") return Chart::Std;
  if (j == "inv") return Chart::Inv;
  throw ParseError("chart must be \"std\" or \"inv\"");
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as an integer or \"p/q\" string, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

GammaValue gamma_from_json(const Json& j) {
  if (j.is_string()) return GammaValue::parse(j.get<std::string>());
  return GammaValue(rational_from_json(j));
}

Json to_json(const GammaValue& g) { return g.str(); }

FieldSpec field_from_json(const Json& j) {
  const std::string kind = field_of(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  FieldSpec spec = [&] {
    if (kind == "padic") {
      const Json& p = field_of(j, "p");
      if (p.is_number_integer()) return FieldSpec::padic(p.get<long>());
      if (p.is_string()) return FieldSpec::padic(Integer(p.get<std::string>()));
      throw ParseError("p must be an integer");
    }
    if (kind == "tadic") return FieldSpec::tadic();
    throw ParseError("field kind must be \"padic\" or \"tadic\"");
  }();
  if (j.contains("max_degree")) {
    const Json& d = j.at("max_degree");
    if (!d.is_number_unsigned()) throw ParseError("max_degree must be a nonnegative integer");
    spec = spec.with_max_degree(d.get<std::size_t>());
  }
  return spec;
}

Json to_json(const FieldSpec& spec) {
  Json out{{"kind", spec.kind()}, {"max_degree", spec.max_degree()}};
  if (spec.kind() == "padic") out["p"] = spec.p().get_str();
  return out;
}

FieldElem elem_from_json(const Json& j, const FieldSpec& spec) {
  FieldElem a;
  if (j.is_object()) {
    if (spec.kind() != "tadic") throw ParseError("rational-function elements need a tadic field");
    auto den = j.contains("den") ? qpoly_from_json(j.at("den")) : QPoly{Rational(1)};
    qpoly::trim(den);
    if (den.empty()) throw ParseError("zero denominator");
    a = FieldElem::ratfunc(qpoly_from_json(field_of(j, "num")), den);
  } else {
    a = FieldElem(rational_from_json(j));
  }
  spec.field().check(a);
  return a;
}

Json to_json(const FieldElem& a) {
  if (a.is_rational()) return to_string(a.rational());
  return Json{{"num", qpoly_to_json(a.numerator())}, {"den", qpoly_to_json(a.denominator())}};
}

PLinePoint point_from_json(const Json& j, const FieldSpec& spec) {
  if (j == "inf" || j == "∞") return point_at_infinity();
  if (j.is_object() && j.contains("chart")) {
    return normalize_point(spec, chart_from_json(j.at("chart")), elem_from_json(field_of(j, "center"), spec),
                           gamma_from_json(field_of(j, "radius")));
  }
  return simple_point(spec, elem_from_json(j, spec));
}

Json to_json(const PLinePoint& p) {
  return Json{{"chart", p.chart == Chart::Std ? "std" : "inv"},
              {"center", to_json(p.center)},
              {"radius", to_json(p.radius)}};
}

Poly poly_from_json(const Json& j, const FieldSpec& spec) {
  std::vector<FieldElem> c;
  for (const auto& e : array_of(j, "polynomial")) c.push_back(elem_from_json(e, spec));
  return Poly(std::move(c));
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

BiPoly bipoly_from_json(const Json& j, const FieldSpec& spec) {
  BiPoly f;
  for (const auto& a : array_of(j, "F")) f.y_coeffs.push_back(poly_from_json(a, spec));
  return f;
}

MPoly mpoly_from_json(const Json& j, const FieldSpec& spec) {
  std::map<MPoly::Exponent, FieldElem> terms;
  std::size_t nvars = 0;
  bool first = true;
  for (const auto& t : array_of(j, "polynomial terms")) {
    if (!t.is_array() || t.size() != 2) throw ParseError("term must be [[exponents], coefficient]");
    MPoly::Exponent e;
    for (const auto& x : array_of(t[0], "exponent")) {
      if (!x.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
      e.push_back(x.get<unsigned>());
    }
    if (!first && e.size() != nvars) throw ParseError("terms disagree on the number of variables");
    nvars = e.size();
    first = false;
    terms[e] += elem_from_json(t[1], spec);
  }
  if (first) throw ParseError("polynomial has no terms");
  return MPoly(nvars, terms);
}

Json to_json(const FiniteMetricTree& t) {
  Json verts = Json::array();
  for (const auto& v : t.vertices) {
    Json jv{{"label", v.label}, {"marked", v.marked}};
    if (v.point) jv["point"] = to_json(*v.point);
    verts.push_back(jv);
  }
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"length", to_json(e.length)}});
  return Json{{"vertices", verts}, {"edges", edges}};
}

FiniteMetricTree tree_from_json(const Json& j, const FieldSpec& spec) {
  FiniteMetricTree t;
  for (const auto& v : array_of(field_of(j, "vertices"), "vertices")) {
    FiniteMetricTree::Vertex vert;
    vert.label = field_of(v, "label").get<std::string>();
    vert.marked = field_of(v, "marked").get<bool>();
    if (v.contains("point")) vert.point = point_from_json(v.at("point"), spec);
    t.vertices.push_back(std::move(vert));
  }
  for (const auto& e : array_of(field_of(j, "edges"), "edges")) {
    t.edges.push_back({field_of(e, "a").get<std::size_t>(), field_of(e, "b").get<std::size_t>(),
                       gamma_from_json(field_of(e, "length"))});
  }
  return t;
}

Json to_json(const Affine& a) { return Json{{"slope", to_json(a.slope)}, {"intercept", to_json(a.intercept)}}; }

Json to_json(const RootProfile& p) {
  Json pieces = Json::array();
  for (const auto& piece : p.pieces) {
    Json roots = Json::array();
    for (const auto& [aff, mult] : piece.roots) {
      Json r = to_json(aff);
      r["multiplicity"] = mult;
      r["valuation"] = aff.str();
      roots.push_back(r);
    }
    pieces.push_back(Json{{"lo", to_json(piece.lo)}, {"hi", to_json(piece.hi)}, {"roots", roots}});
  }
  Json events = Json::array();
  for (const auto& e : branch_events(p)) events.push_back(to_json(e));
  return Json{{"pieces", pieces}, {"branch_events", events}};
}

RootProfile profile_from_json(const Json& j) {
  RootProfile p;
  for (const auto& piece : array_of(field_of(j, "pieces"), "pieces")) {
    RootProfile::Piece out{rational_from_json(field_of(piece, "lo")), gamma_from_json(field_of(piece, "hi")), {}};
    for (const auto& r : array_of(field_of(piece, "roots"), "roots")) {
      out.roots.push_back({Affine{rational_from_json(field_of(r, "slope")), gamma_from_json(field_of(r, "intercept"))},
                           field_of(r, "multiplicity").get<long>()});
    }
    p.pieces.push_back(std::move(out));
  }
  return p;
}

Json to_json(const TropPoint& p) {
  Json out = Json::array();
  for (const auto& g : p.coords) out.push_back(to_json(g));
  return out;
}

TropPoint trop_from_json(const Json& j) {
  TropPoint p;
  for (const auto& g : array_of(j, "tropical point")) p.coords.push_back(gamma_from_json(g));
  return p;
}

Functional functional_from_json(const Json& j, const std::vector<std::string>& coords) {
  Functional f{lp::Vec(coords.size()), Rational(0)};
  const Json& coeffs = field_of(j, "coeffs");
  if (!coeffs.is_object()) throw ParseError("coeffs must be an object keyed by coordinate");
  for (const auto& [name, value] : coeffs.items()) {
    auto it = std::find(coords.begin(), coords.end(), name);
    if (it == coords.end()) throw ParseError("coefficient names unknown coordinate " + name);
    f.alpha[static_cast<std::size_t>(it - coords.begin())] = rational_from_json(value);
  }
  if (j.contains("c")) f.c = rational_from_json(j.at("c"));
  return f;
}

Json to_json(const Functional& f, const std::vector<std::string>& coords) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(f.alpha[i]) != 0) coeffs[coords[i]] = to_json(f.alpha[i]);
  }
  return Json{{"coeffs", coeffs}, {"c", to_json(f.c)}};
}

namespace {

Json vec_to_json(const lp::Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

lp::Vec vec_from_json(const Json& j, std::size_t n) {
  lp::Vec v;
  for (const auto& x : array_of(j, "vector")) v.push_back(rational_from_json(x));
  if (v.size() != n) throw ParseError("vector length does not match w");
  return v;
}

}  // namespace

Json to_json(const FlowResult& r, const std::vector<std::string>& coords) {
  Json traj = Json::array();
  for (const auto& s : r.trajectory) {
    traj.push_back(Json{{"time", to_json(s.time)}, {"cell", s.cell.signs}, {"direction", vec_to_json(s.direction)}});
  }
  Json end = Json::array();
  for (const auto& g : r.endpoint) end.push_back(to_json(g));
  return Json{{"coords", coords},
              {"trajectory", traj},
              {"final_cell", r.final_cell.signs},
              {"endpoint", end},
              {"lipschitz", to_json(r.lipschitz)}};
}

FlowResult flow_result_from_json(const Json& j, const std::vector<std::string>& coords) {
  FlowResult r;
  for (const auto& s : array_of(field_of(j, "trajectory"), "trajectory")) {
    r.trajectory.push_back({gamma_from_json(field_of(s, "time")), Cell{field_of(s, "cell").get<std::string>()},
                            vec_from_json(field_of(s, "direction"), coords.size())});
  }
  r.final_cell = Cell{field_of(j, "final_cell").get<std::string>()};
  for (const auto& g : array_of(field_of(j, "endpoint"), "endpoint")) r.endpoint.push_back(gamma_from_json(g));
  if (r.endpoint.size() != coords.size()) throw ParseError("endpoint length does not match w");
  r.lipschitz = rational_from_json(field_of(j, "lipschitz"));
  return r;
}

Json to_json(const Fingerprint& f) {
  Json lengths = Json::array();
  for (const auto& l : f.finite_lengths) lengths.push_back(to_json(l));
  return Json{{"shape", f.shape}, {"metric", f.metric}, {"finite_lengths", lengths}};
}

Json to_json(const FamilySweep& s) {
  Json classes = Json::array();
  for (const auto& c : s.classes) {
    Json samples = Json::array();
    for (const auto& b : c.samples) samples.push_back(to_json(b));
    classes.push_back(Json{{"fingerprint", to_json(c.fingerprint)}, {"samples", samples}});
  }
  return Json{{"classes", classes}, {"count", s.classes.size()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sp1::io
