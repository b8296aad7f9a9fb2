#include "rootadj/serialize.hpp"

#include <cmath>
#include <set>

#include "rootadj/error.hpp"

namespace rootadj {

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ValidationError, field + ": " + what);
}

void reject_unknown(const Json& obj, const std::string& field, const std::set<std::string>& known) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key())) invalid(field.empty() ? it.key() : field + "." + it.key(), "unknown field");
}

const Json& require_object(const Json& j, const std::string& field) {
  if (!j.is_object()) invalid(field, "expected an object");
  return j;
}

long positive_integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) invalid(field, "expected an integer");
  long v = j.get<long>();
  if (v < 1) invalid(field, "must be at least 1");
  return v;
}

double positive_number(const Json& j, const std::string& field) {
  if (!j.is_number()) invalid(field, "expected a number");
  double v = j.get<double>();
  if (!(v > 0) || !std::isfinite(v)) invalid(field, "must be a positive finite number");
  return v;
}

Json vertex_json(const Vertex& v) {
  if (v.ideal) return {{"ideal", true}, {"at", to_json(v.p)}};
  return {{"ideal", false}, {"re", v.z.real()}, {"im", v.z.imag()}};
}

}  // namespace

Json to_json(const IsometryMatrix& m) { return Json::array({m.a(), m.b(), m.c(), m.d()}); }

Json to_json(const BoundaryPoint& p) {
  if (p.is_infinity()) return "inf";
  return p.value();
}

Json to_json(const GeneralizedGeodesic& g) {
  if (const auto* l = std::get_if<ProperGeodesic>(&g))
    return {{"type", "geodesic"}, {"from", to_json(l->p)}, {"to", to_json(l->q)}};
  if (const auto* p = std::get_if<BoundaryPoint>(&g)) return {{"type", "boundary"}, {"at", to_json(*p)}};
  const Complex& z = std::get<InteriorPoint>(g).z;
  return {{"type", "point"}, {"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const ElementClass& c) {
  Json j = {{"kind", to_string(c.kind)}};
  if (c.is(Kind::Hyperbolic)) j["translation_length"] = c.translation_length;
  if (c.is(Kind::Elliptic)) {
    j["rotation_angle"] = c.rotation_angle;
    j["finite_order"] = c.finite_order ? Json(*c.finite_order) : Json(nullptr);
    if (c.unresolved_order) j["unresolved_order"] = true;
  }
  return j;
}

Json to_json(const HexagonConfig& h) {
  static const char* side_names[6] = {"Ax_A", "L", "Ax_B", "L_B", "Ax_A^-1B", "L_A"};
  Json sides = Json::array(), vertices = Json::array();
  for (int i = 0; i < 6; ++i) {
    Json s = to_json(h.sides[i]);
    s["name"] = side_names[i];
    sides.push_back(s);
    vertices.push_back(vertex_json(h.vertices[i]));
  }
  return {{"generators", {{"A", to_json(h.a)}, {"B", to_json(h.b)}}},
          {"classes", {{"A", to_json(h.classes[0])}, {"B", to_json(h.classes[1])}, {"A^-1B", to_json(h.classes[2])}}},
          {"sides", sides},
          {"vertices", vertices},
          {"orientation", h.orientation}};
}

Json to_json(const StoppingResult& s) {
  if (const auto* n = std::get_if<NotStopping>(&s)) return {{"stopping", false}, {"reason", n->reason}};
  const auto& c = std::get<StoppingClass>(s);
  return {{"stopping", true}, {"tag", c.tag}, {"canonical", c.canonical}, {"shape", to_string(c.shape)}};
}

Json to_json(const RootLineFan& f) {
  Json lines = Json::array();
  for (const FanLine& l : f.lines) {
    Json e = {{"s", l.s}, {"line", to_json(GeneralizedGeodesic(l.line))}, {"exit", to_string(l.exit.tag)}};
    if (l.exit.boundary_vertex) e["boundary_vertex"] = true;
    if (l.exit.borderline) e["borderline"] = true;
    lines.push_back(e);
  }
  Json split = Json::array();
  for (auto [x, y] : f.splitting) split.push_back({x, y});
  return {{"role", to_string(f.role)}, {"n", f.n}, {"root", to_json(f.root)}, {"lines", lines}, {"splitting", split}};
}

Json to_json(const Verdict& v) {
  Json j = {{"outcome", to_string(v.outcome)}, {"clause", v.clause}, {"flags", v.flags}, {"crossings", v.crossings}};
  if (v.reduced_pair) j["reduced_pair"] = {to_json(v.reduced_pair->first), to_json(v.reduced_pair->second)};
  if (v.elliptic) j["elliptic"] = {{"matrix", to_json(*v.elliptic)}, {"class", to_json(classify(*v.elliptic))}};
  j["borderline"] = v.borderline();
  return j;
}

Json to_json(const WordWitness& w) {
  Json letters = Json::array();
  for (auto [gen, e] : w.word) letters.push_back({gen, e});
  return {{"word", word_string(w.word)}, {"letters", letters}, {"matrix", to_json(w.matrix)}, {"defect", w.defect}};
}

Json to_json(const RegionCertificate& c) {
  Json lines = Json::array();
  for (const ProperGeodesic& l : c.lines) lines.push_back(to_json(GeneralizedGeodesic(l)));
  return {{"outcome", to_string(c.outcome)}, {"lines", lines}, {"orders", c.orders}};
}

Json to_json(const CrossCheckReport& r) {
  return {{"status", to_string(r.status)},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"certificate", r.certificate ? to_json(*r.certificate) : Json(nullptr)},
          {"evidence", r.evidence}};
}

IsometryMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4) invalid(field, "expected an array of four numbers");
  double e[4];
  for (size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number()) invalid(field, "expected an array of four numbers");
    e[i] = j[i].get<double>();
    if (!std::isfinite(e[i])) invalid(field, "entries must be finite");
  }
  double det = e[0] * e[3] - e[1] * e[2];
  if (det < 0) invalid(field, "negative determinant (orientation reversing)");
  if (!(det > 0)) invalid(field, "singular matrix");
  return IsometryMatrix(e[0], e[1], e[2], e[3]);
}

Tolerances ToleranceOverrides::apply(Tolerances base) const {
  if (alg) base.alg = *alg;
  if (cls) base.cls = *cls;
  if (geo) base.geo = *geo;
  if (vertex) base.vertex = *vertex;
  if (rational_residual) base.rational_residual = *rational_residual;
  if (max_denominator) base.max_denominator = *max_denominator;
  return base;
}

GroupSpec parse_group_spec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1, column = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError,
                "parse error at line " + std::to_string(line) + " column " + std::to_string(column));
  }
  require_object(doc, "document");
  reject_unknown(doc, "", {"generators", "root", "tolerances"});
  if (!doc.contains("generators")) invalid("generators", "missing");
  const Json& gens = require_object(doc["generators"], "generators");
  reject_unknown(gens, "generators", {"A", "B"});

  GroupSpec spec;
  for (const char* name : {"A", "B"}) {
    std::string field = std::string("generators.") + name;
    if (!gens.contains(name)) invalid(field, "missing");
    IsometryMatrix m = matrix_from_json(gens[name], field);
    if (m.is_identity()) invalid(field, "identity generator");
    (name[0] == 'A' ? spec.a : spec.b) = m;
  }

  if (doc.contains("root")) {
    const Json& r = require_object(doc["root"], "root");
    reject_unknown(r, "root", {"role", "num", "den"});
    RootSpec root;
    if (!r.contains("role") || !r["role"].is_string()) invalid("root.role", "expected \"A\" or \"B\"");
    std::string role = r["role"].get<std::string>();
    if (role != "A" && role != "B") invalid("root.role", "expected \"A\" or \"B\"");
    root.role = role == "A" ? Role::A : Role::B;
    if (!r.contains("num")) invalid("root.num", "missing");
    if (!r.contains("den")) invalid("root.den", "missing");
    root.num = positive_integer(r["num"], "root.num");
    root.den = positive_integer(r["den"], "root.den");
    spec.root = root;
  }

  if (doc.contains("tolerances")) {
    const Json& t = require_object(doc["tolerances"], "tolerances");
    reject_unknown(t, "tolerances", {"alg", "cls", "geo", "vertex", "rational_residual", "max_denominator"});
    ToleranceOverrides o;
    auto number = [&](const char* key, std::optional<double>& out) {
      if (t.contains(key)) out = positive_number(t[key], std::string("tolerances.") + key);
    };
    number("alg", o.alg);
    number("cls", o.cls);
    number("geo", o.geo);
    number("vertex", o.vertex);
    number("rational_residual", o.rational_residual);
    if (t.contains("max_denominator"))
      o.max_denominator = positive_integer(t["max_denominator"], "tolerances.max_denominator");
    spec.tolerances = o;
  }
  return spec;
}

Json to_json(const GroupSpec& g) {
  Json j = {{"generators", {{"A", to_json(g.a)}, {"B", to_json(g.b)}}}};
  if (g.root) j["root"] = {{"role", to_string(g.root->role)}, {"num", g.root->num}, {"den", g.root->den}};
  if (g.tolerances) {
    Json t = Json::object();
    const ToleranceOverrides& o = *g.tolerances;
    if (o.alg) t["alg"] = *o.alg;
    if (o.cls) t["cls"] = *o.cls;
    if (o.geo) t["geo"] = *o.geo;
    if (o.vertex) t["vertex"] = *o.vertex;
    if (o.rational_residual) t["rational_residual"] = *o.rational_residual;
    if (o.max_denominator) t["max_denominator"] = *o.max_denominator;
    j["tolerances"] = t;
  }
  return j;
}

bool equivalent(const GroupSpec& x, const GroupSpec& y, double eps) {
  if (!x.a.equivalent(y.a, eps) || !x.b.equivalent(y.b, eps)) return false;
  if (x.root.has_value() != y.root.has_value()) return false;
  if (x.root && (x.root->role != y.root->role || x.root->num != y.root->num || x.root->den != y.root->den))
    return false;
  if (x.tolerances.has_value() != y.tolerances.has_value()) return false;
  if (x.tolerances) {
    const ToleranceOverrides &p = *x.tolerances, &q = *y.tolerances;
    if (p.alg != q.alg || p.cls != q.cls || p.geo != q.geo || p.vertex != q.vertex ||
        p.rational_residual != q.rational_residual || p.max_denominator != q.max_denominator)
      return false;
  }
  return true;
}

}  // namespace rootadj
