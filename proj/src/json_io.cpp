#include "adjrep/json_io.hpp"

#include "adjrep/error.hpp"

namespace adjrep {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

QVector qvector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  QVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rows");
  QMatrix out;
  for (const auto& row : j) out.push_back(qvector_from_json(row));
  return out;
}

// ---------------------------------------------------------------- polynomials

namespace {

RegistryPtr registry_from_json(const Json& j) {
  if (!j.contains("vars") || !j["vars"].is_array()) throw InputError("missing \"vars\" array");
  return make_registry(j["vars"].get<std::vector<std::string>>());
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j[key];
}

}  // namespace

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
  }
  return Json{{"vars", p.registry()->names()}, {"terms", terms}, {"text", p.str()}};
}

Poly poly_from_json(const Json& j, const RegistryPtr& reg) {
  if (j.is_string()) {
    if (!reg) throw InputError("polynomial string needs a variable list");
    return Poly::parse(reg, j.get<std::string>());
  }
  auto own = registry_from_json(j);
  Poly p(own);
  if (j.contains("terms")) {
    for (const auto& t : j["terms"]) {
      auto e = require(t, "exps").get<Exponents>();
      if (e.size() != own->size()) throw InputError("exponent vector length does not match \"vars\"");
      Rational c = rational_from_json(require(t, "coeff"));
      if (c.is_zero()) throw InputError("zero coefficient in term list");
      if (!p.coefficient(e).is_zero()) throw InputError("repeated monomial in term list");
      p.add_term(e, c);
    }
  } else {
    p = Poly::parse(own, require(j, "text").get<std::string>());
  }
  return reg ? p.remap(reg) : p;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return Json{{"vars", m.registry()->names()}, {"rows", rows}};
}

PolyMatrix matrix_from_json(const Json& j, const RegistryPtr& reg) {
  const Json& rows = require(j, "rows");
  std::vector<std::vector<std::string>> text;
  for (const auto& row : rows) text.push_back(row.get<std::vector<std::string>>());
  RegistryPtr own = j.contains("vars") ? registry_from_json(j) : reg;
  if (!own) throw InputError("matrix needs a variable list");
  PolyMatrix m = PolyMatrix::parse(own, text);
  if (!reg || same_registry(own, reg)) return m;
  std::vector<std::vector<Poly>> out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    out.emplace_back();
    for (std::size_t c = 0; c < m.size(); ++c) out.back().push_back(m(r, c).remap(reg));
  }
  return PolyMatrix(reg, std::move(out));
}

// ---------------------------------------------------------------- polytopes

Json to_json(const HPolytope& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back(Json{{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  Json out{{"dim", p.dim()}, {"name", p.name()}, {"facets", facets}};
  if (p.has_chart()) out["chart"] = to_json(p.chart());
  return out;
}

HPolytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("polytope must be a JSON object");
  std::string name = j.value("name", "");
  if (j.contains("homogeneous_facets")) {
    QMatrix forms = qmatrix_from_json(j["homogeneous_facets"]);
    if (forms.empty()) throw InputError("empty facet list");
    QMatrix chart;
    if (j.contains("chart")) {
      chart = qmatrix_from_json(j["chart"]);
    } else {
      chart.assign(forms[0].size(), QVector(forms[0].size(), Rational(0)));
      for (std::size_t i = 0; i < chart.size(); ++i) chart[i][i] = Rational(1);
    }
    return HPolytope::from_homogeneous(forms, chart, name);
  }
  if (j.contains("facets")) {
    const std::size_t dim = require(j, "dim").get<std::size_t>();
    std::vector<Facet> facets;
    for (const auto& f : j["facets"]) {
      facets.push_back(Facet{qvector_from_json(require(f, "normal")), rational_from_json(require(f, "offset"))});
    }
    std::optional<QMatrix> chart;
    if (j.contains("chart")) chart = qmatrix_from_json(j["chart"]);
    return HPolytope(dim, std::move(facets), name, chart);
  }
  if (j.contains("vertices")) {
    std::vector<QPoint> pts;
    for (const auto& v : j["vertices"]) pts.push_back(qvector_from_json(v));
    if (pts.empty() || pts[0].size() != 2) throw InputError("vertex input is supported for polygons only");
    return Polygon::from_vertices(std::move(pts)).to_hpolytope(name);
  }
  throw InputError("polytope needs \"facets\", \"homogeneous_facets\" or \"vertices\"");
}

// ---------------------------------------------------------------- lines

Json to_json(const Line3& l) {
  Json out{{"points", Json::array({to_json(l.p), to_json(l.q)})}};
  if (l.facets) out["facets"] = Json::array({l.facets->first, l.facets->second});
  return out;
}

Line3 line_from_json(const Json& j) {
  const Json& pts = require(j, "points");
  if (!pts.is_array() || pts.size() != 2) throw InputError("a line needs exactly two points");
  std::optional<std::pair<std::size_t, std::size_t>> f;
  if (j.contains("facets")) {
    auto v = j["facets"].get<std::vector<std::size_t>>();
    if (v.size() != 2) throw InputError("line facets must be a pair");
    f = std::make_pair(v[0], v[1]);
  }
  return Line3(qvector_from_json(pts[0]), qvector_from_json(pts[1]), f);
}

LineArrangement lines_from_json(const Json& j) {
  const Json& arr = j.is_object() ? require(j, "lines") : j;
  LineArrangement out;
  for (const auto& l : arr) out.push_back(line_from_json(l));
  return out;
}

namespace {

Json node_json(const NiceNode& n) {
  Json out{{"degree", n.degree}, {"lines", n.lines}};
  if (n.degree > 1) {
    out["Z"] = n.z;
    out["Y"] = n.y;
    out["plane"] = to_json(n.plane);
    out["lines_in_plane"] = n.in_plane;
    out["Y_certificate"] = node_json(*n.y_certificate);
    out["complement_certificate"] = node_json(*n.rest_certificate);
  }
  return out;
}

}  // namespace

Json to_json(const NiceCertificate& c) { return node_json(*c.root); }

Json to_json(const Flat& f) {
  return Json{{"facets", f.facets}, {"codim", f.codim}, {"basis", to_json(f.basis)}};
}

Json to_json(const Triangulation& t) {
  Json d = Json::array();
  for (auto [a, b] : t.diagonals) d.push_back(Json::array({a, b}));
  return Json{{"n", t.n}, {"diagonals", d}};
}

Json to_json(const ObstructionWitness& w) {
  Json out{{"reason", w.reason}};
  if (w.reason == "no_primary_monomial") return out;
  const auto& reg = w.cofactor.registry();
  std::vector<std::string> derived;
  for (auto v : w.derived_by) derived.push_back(reg->name(v));
  out["differentiated"] = derived;
  out["rayleigh_pair"] = Json::array({reg->name(w.i), reg->name(w.j)});
  out["variable"] = reg->name(w.v);
  out["monomial"] = w.monomial.str();
  out["cofactor"] = w.cofactor.str();
  if (!w.disc.is_zero()) out["discriminant_terms"] = w.disc.num_terms();
  return out;
}

}  // namespace adjrep
