#include "adjrep/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "adjrep/adjoint.hpp"
#include "adjrep/arrangements3d.hpp"
#include "adjrep/assoc.hpp"
#include "adjrep/detrep2d.hpp"
#include "adjrep/error.hpp"
#include "adjrep/fixtures.hpp"
#include "adjrep/random_polytopes.hpp"

namespace adjrep::cli {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json load_document(const JobSpec& spec) {
  if (spec.fixture) return fixture(*spec.fixture);
  if (spec.input) return read_json_file(*spec.input);
  throw InputError("either --input or --fixture is required");
}

HPolytope polytope_of(const Json& doc) {
  return polytope_from_json(doc.contains("polytope") ? doc["polytope"] : doc);
}

std::optional<RegistryPtr> doc_registry(const Json& doc) {
  if (!doc.contains("vars")) return std::nullopt;
  return make_registry(doc["vars"].get<std::vector<std::string>>());
}

// Printed polynomial of a document, homogenized with x0 when needed.
std::optional<Poly> printed_poly(const Json& doc, const std::string& key, int degree) {
  if (!doc.contains(key)) return std::nullopt;
  Poly p = doc[key].is_object() ? poly_from_json(doc[key]) : poly_from_json(doc[key], *doc_registry(doc));
  if (!p.is_homogeneous() || p.degree() < degree) p = p.homogenize(0, degree);
  return p;
}

PolyMatrix homogenized(const PolyMatrix& m) {
  PolyMatrix h(m.registry(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      const Poly& e = m(r, c);
      h.set(r, c, e.is_homogeneous() && e.degree() == 1 ? e : e.homogenize(0, 1));
    }
  }
  return h;
}

PolyMatrix matrix_of(const JobSpec& spec, const Json& doc, const RegistryPtr& reg) {
  if (!spec.matrix || *spec.matrix == "builtin") {
    const char* key = doc.contains("printed_matrix") ? "printed_matrix" : "matrix";
    if (!doc.contains(key)) throw InputError("no built-in matrix in this input; pass --matrix <file>");
    return matrix_from_json(Json{{"rows", doc[key]}}, reg);
  }
  return matrix_from_json(read_json_file(*spec.matrix), reg);
}

Json approx_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"monomial", Poly::monomial(p.registry(), e, Rational(1)).str()}, {"value", c.to_double()}});
  }
  return Json{{"non_authoritative", true}, {"terms", terms}};
}

Json polytope_summary(const HPolytope& p, const VRep& v, const IncidenceData& inc) {
  return Json{{"name", p.name()},
              {"dim", p.dim()},
              {"facets", p.num_facets()},
              {"vertices", v.vertices.size()},
              {"simple_polytope", inc.is_simple(p.dim())},
              {"simple_arrangement", is_simple_arrangement(p).simple}};
}

Polygon polygon_of(const HPolytope& p, const Json& doc) {
  const Json& poly = doc.contains("polytope") ? doc["polytope"] : doc;
  if (poly.contains("vertices") && !poly.contains("facets")) {
    std::vector<QPoint> pts;
    for (const auto& v : poly["vertices"]) pts.push_back(qvector_from_json(v));
    return Polygon::from_vertices(std::move(pts));
  }
  return Polygon::from_polytope(p);
}

// ---------------------------------------------------------------- commands

JobResult cmd_adjoint(const JobSpec& spec) {
  Json doc = load_document(spec);
  HPolytope p = polytope_of(doc);
  auto [v, inc] = enumerate_vertices(p);
  AdjointResult a = adjoint(p);
  Json r{{"command", "adjoint"}, {"polytope", polytope_summary(p, v, inc)}, {"degree", a.degree}};
  r["adjoint"] = to_json(a.homogeneous);
  r["adjoint_affine"] = a.affine.str();
  if (spec.approx) r["approx"] = approx_json(a.homogeneous);
  int code = kOk;
  if (auto printed = printed_poly(doc, "printed_adjoint", a.degree)) {
    auto c = equal_up_to_scalar(printed->remap(a.homogeneous.registry()), a.homogeneous);
    r["matches_paper"] = c.has_value();
    if (c) r["paper_scalar"] = to_json(*c);
    if (!c) code = kCertificateFailure;
  }
  return {code, r};
}

JobResult cmd_residual(const JobSpec& spec) {
  Json doc = load_document(spec);
  HPolytope p = polytope_of(doc);
  auto [v, inc] = enumerate_vertices(p);
  auto ra = residual_arrangement(p, inc);
  AdjointResult a = adjoint(p);
  const std::size_t n = p.dim();
  Json flats = Json::array();
  bool vanish = true;
  for (const auto& f : ra.flats) {
    Json fj = to_json(f);
    bool ok = vanishes_on_flat(a.homogeneous, f);
    fj["adjoint_vanishes"] = ok;
    vanish = vanish && ok;
    flats.push_back(fj);
  }
  Json by_dim = Json::object();
  for (std::size_t c = 2; c <= n; ++c) by_dim[std::to_string(n - c)] = ra.count(c);
  Json r{{"command", "residual"},
         {"polytope", polytope_summary(p, v, inc)},
         {"residual_lines", n >= 2 ? ra.count(n - 1) : 0},
         {"residual_planes", n >= 3 ? ra.count(n - 2) : 0},
         {"flats_by_dimension", by_dim},
         {"adjoint_vanishes_on_all", vanish},
         {"flats", flats}};
  for (const char* key : {"residual_lines", "residual_planes"}) {
    if (doc.contains(key)) r[std::string("expected_") + key] = doc[key];
  }
  return {vanish ? kOk : kCertificateFailure, r};
}

JobResult cmd_detrep2d(const JobSpec& spec) {
  Json doc = load_document(spec);
  HPolytope hp = polytope_of(doc);
  if (hp.dim() != 2) throw PreconditionError("detrep2d needs a polygon");
  Polygon p = polygon_of(hp, doc);
  TridiagonalRep rep = build_tridiagonal(p);
  QPoint c = interior_point(p.to_hpolytope());
  bool definite = definiteness_certificate(rep.matrix, c);
  Json scalars = Json::array();
  for (const auto& [l, m] : rep.scalars) scalars.push_back(Json{{"lambda", to_json(l)}, {"mu", to_json(m)}});
  Json minors = Json::array();
  for (const auto& s : rep.minor_scalars) minors.push_back(to_json(s));
  Json r{{"command", "detrep2d"},
         {"vertices", p.size()},
         {"matrix", to_json(rep.matrix)},
         {"symmetric", rep.matrix.is_symmetric()},
         {"tridiagonal", rep.matrix.is_tridiagonal()},
         {"recursion_scalars", scalars},
         {"leading_minor_scalars", minors},
         {"det_scalar", to_json(rep.det_scalar)},
         {"negated", rep.negated},
         {"interior_point", to_json(c)},
         {"definite_at_interior_point", definite}};
  bool ok = definite;
  if (doc.contains("definite_point")) {
    QPoint q = qvector_from_json(doc["definite_point"]);
    bool d = definiteness_certificate(rep.matrix, q);
    r["definite_point"] = to_json(q);
    r["definite_at_definite_point"] = d;
    ok = ok && d;
  }
  return {ok ? kOk : kCertificateFailure, r};
}

JobResult cmd_verify_detrep(const JobSpec& spec) {
  Json doc = load_document(spec);
  HPolytope p = polytope_of(doc);
  AdjointResult a = adjoint(p);
  auto reg = a.homogeneous.registry();
  PolyMatrix m = homogenized(matrix_of(spec, doc, reg));
  Poly target = a.homogeneous;
  std::string against = "computed_adjoint";
  if (auto printed = printed_poly(doc, "printed_adjoint", a.degree)) {
    target = printed->remap(reg);
    against = "printed_adjoint";
  }
  auto c = verify_detrep(m, target);
  Json r{{"command", "verify-detrep"}, {"matrix", to_json(m)}, {"compared_with", against}};
  r["is_representation"] = c.has_value();
  if (c) {
    r["scalar"] = to_json(*c);
    r["scalar_is_one"] = c->is_one();
  }
  if (m.is_symmetric()) r["definite_at_interior_point"] = definiteness_certificate(m, interior_point(p));
  return {c ? kOk : kCertificateFailure, r};
}

LineArrangement lines_of_pairs(const HPolytope& p, const Json& pairs) {
  LineArrangement out;
  for (const auto& pr : pairs) {
    auto v = pr.get<std::vector<std::size_t>>();
    if (v.size() != 2 || v[0] >= p.num_facets() || v[1] >= p.num_facets()) throw InputError("bad facet pair");
    out.push_back(Line3::from_planes(p.ambient_form(v[0]), p.ambient_form(v[1]), std::make_pair(v[0], v[1])));
  }
  return out;
}

JobResult cmd_nice3d(const JobSpec& spec) {
  Json doc = load_document(spec);
  std::size_t degree = spec.degree ? *spec.degree : doc.value("degree", 0u);
  if (degree == 0) throw InputError("--degree is required");
  LineArrangement lines;
  std::string source;
  if (doc.contains("lines")) {
    lines = lines_from_json(doc);
    source = "lines";
  } else {
    HPolytope p = polytope_of(doc);
    if (doc.contains("printed_residual_lines")) {
      lines = lines_of_pairs(p, doc["printed_residual_lines"]);
      source = "printed_residual_lines";
    } else {
      lines = residual_lines(p);
      source = "residual_lines";
    }
  }
  Json r{{"command", "nice3d"}, {"degree", degree}, {"source", source}, {"lines", lines.size()}};
  std::optional<NiceSubarrangement> found;
  if (lines.size() == degree * (degree - 1) / 2) {
    if (auto c = is_nice(lines, degree)) {
      std::vector<std::size_t> all(lines.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      found = NiceSubarrangement{all, *c};
    }
  } else {
    found = find_nice_subarrangement(lines, degree);
  }
  r["nice"] = found.has_value();
  if (found) {
    LineArrangement sub;
    Json sj = Json::array();
    for (auto i : found->subset) {
      sub.push_back(lines[i]);
      sj.push_back(to_json(lines[i]));
    }
    r["subset"] = found->subset;
    r["subset_lines"] = sj;
    r["certificate"] = to_json(found->certificate);
    r["certificate_valid"] = validate_nice_certificate(sub, found->certificate);
    r["h0"] = Json{{std::to_string(degree - 2), h0_vanishing_dimension(sub, static_cast<int>(degree) - 2)},
                   {std::to_string(degree - 1), h0_vanishing_dimension(sub, static_cast<int>(degree) - 1)}};
  } else if (auto t = three_concurrent(lines)) {
    r["concurrent_triple"] = *t;
  }
  return {found ? kOk : kCertificateFailure, r};
}

JobResult cmd_singularity(const JobSpec& spec) {
  Json doc = load_document(spec);
  HPolytope p = polytope_of(doc);
  if (p.dim() != 3) throw PreconditionError("singularity certificates need a 3-polytope");
  AdjointResult a = adjoint(p);
  auto lines = residual_lines(p);
  auto w = concurrency_singularity_certificate(p, a.homogeneous);
  Json r{{"command", "singularity"}, {"facets", p.num_facets()}, {"residual_lines", lines.size()}};
  r["certificate"] = w.has_value();
  if (w) {
    r["point"] = to_json(w->point);
    r["lines"] = w->lines;
    r["facets_at_point"] = w->facets;
    r["gradient"] = to_json(gradient_at(a.homogeneous, w->point));
  }
  return {kOk, r};
}

JobResult cmd_sweep(const JobSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  Json cases = Json::array();
  bool ok = true;
  for (unsigned t = 0; t < spec.count; ++t) {
    const std::size_t k = 6 + t % 5;
    HPolytope p = random_simple_polytope3(k, rng);
    auto lines = residual_lines(p);
    const std::size_t expected = (k - 3) * (k - 4) / 2;
    Json c{{"facets", k}, {"residual_lines", lines.size()}, {"expected", expected}};
    bool good = lines.size() == expected;
    if (k >= 9) {
      AdjointResult a = adjoint(p);
      auto w = concurrency_singularity_certificate(p, a.homogeneous);
      c["singular_triple_point"] = w.has_value();
      good = good && w.has_value();
    }
    c["ok"] = good;
    ok = ok && good;
    cases.push_back(c);
  }
  return {ok ? kOk : kCertificateFailure,
          Json{{"command", "sweep"}, {"seed", spec.seed}, {"count", spec.count}, {"all_ok", ok}, {"cases", cases}}};
}

JobResult cmd_fixture(const JobSpec& spec) {
  if (!spec.fixture) return {kOk, Json{{"command", "fixture"}, {"fixtures", fixture_names()}}};
  return {kOk, Json{{"command", "fixture"}, {"name", *spec.fixture}, {"data", fixture(*spec.fixture)}}};
}

unsigned assoc_n(const JobSpec& spec, const Json* doc) {
  if (spec.n) return *spec.n;
  if (doc && doc->contains("n")) return (*doc)["n"].get<unsigned>();
  throw InputError("--n is required");
}

JobResult cmd_assoc_adjoint(const JobSpec& spec) {
  const unsigned n = assoc_n(spec, nullptr);
  Poly a = universal_adjoint_assoc(n);
  Json r{{"command", "assoc adjoint"},
         {"n", n},
         {"triangulations", enumerate_triangulations(n).size()},
         {"terms", a.num_terms()},
         {"degree", a.degree()},
         {"adjoint", to_json(a)}};
  int code = kOk;
  if (n == 5 || n == 6) {
    const Json& fx = fixture("assoc-n6");
    Poly printed = n == 5 ? poly_from_json(fx["adj2"]) : poly_from_json(fx["adj3"], fixture_registry("assoc-n6"));
    bool same = printed.remap(a.registry()).canonical() == a.canonical();
    r["matches_paper"] = same;
    if (!same) code = kCertificateFailure;
  }
  return {code, r};
}

JobResult cmd_assoc_verify_av(const JobSpec& spec) {
  const bool builtin = !spec.matrix || *spec.matrix == "builtin";
  Json doc = builtin ? fixture(spec.fixture.value_or("assoc-n6")) : read_json_file(*spec.matrix);
  const unsigned n = assoc_n(spec, &doc);
  auto reg = assoc_registry(n);
  Poly target = universal_adjoint_assoc(n);
  PolyMatrix m = matrix_from_json(builtin ? Json{{"vars", doc["vars"]}, {"rows", doc["matrix"]}} : doc, reg);
  if (!doc.contains("primary")) throw InputError("matrix JSON needs a \"primary\" variable list");
  std::vector<std::size_t> primary;
  for (const auto& name : doc["primary"]) primary.push_back(reg->index(name.get<std::string>()));
  AVCheck chk = check_av_representation(m, target, primary);
  Json r{{"command", "assoc verify-av"}, {"n", n}, {"av_representation", chk.certificate.has_value()}};
  int code = chk.certificate ? kOk : kCertificateFailure;
  if (chk.certificate) {
    std::vector<std::string> sec;
    for (auto v : chk.certificate->secondary_vars) sec.push_back(reg->name(v));
    r["secondary"] = sec;
    r["scalar"] = to_json(chk.certificate->scalar);
  } else {
    r["diagnostic"] = chk.diagnostic;
  }
  // Leading blocks against derivatives in the trailing primary variables.
  Json blocks = Json::array();
  for (std::size_t k = m.size() - 1; k >= 1; --k) {
    std::vector<std::size_t> dropped(primary.begin() + static_cast<long>(k), primary.end());
    std::vector<std::size_t> kept(primary.begin(), primary.begin() + static_cast<long>(k));
    AVCheck b = check_av_representation(m.leading(k), derivative_all(target, dropped), kept);
    blocks.push_back(Json{{"size", k}, {"av_representation", b.certificate.has_value()}});
    if (!b.certificate) code = kCertificateFailure;
  }
  r["leading_blocks"] = blocks;
  return {code, r};
}

JobResult cmd_assoc_obstruct(const JobSpec& spec) {
  const unsigned n = assoc_n(spec, nullptr);
  if (n == 6) {
    auto classes = classify_hexagon_secondaries();
    auto diags = polygon_diagonals(6);
    Json items = Json::array();
    std::size_t open = 0;
    for (const auto& c : classes) {
      if (!c.is_triangulation) continue;
      Json sec = Json::array();
      for (auto k : c.secondary) sec.push_back(diagonal_name(diags[k]));
      Json item{{"secondary", sec}, {"shape", c.shape}, {"verdict", c.witness ? "OBSTRUCTED" : "OPEN"}};
      if (c.witness) item["witness"] = to_json(*c.witness);
      if (!c.witness) ++open;
      items.push_back(item);
    }
    return {kOk, Json{{"command", "assoc obstruct"},
                      {"n", 6},
                      {"secondary_sets_checked", classes.size()},
                      {"open", open},
                      {"triangulations", items}}};
  }
  if (n != 7) throw PreconditionError("the obstruction chain is implemented for n = 6 and n = 7");
  ObstructionChain chain = heptagon_obstruction_chain();
  Json steps = Json::array();
  for (const auto& s : chain.steps) steps.push_back(Json{{"step", s.name}, {"ok", s.ok}, {"detail", s.detail}});
  Json cands = Json::array();
  for (const auto& c : chain.heptagon) {
    Json cj{{"secondary", to_json(c.secondary)["diagonals"]}, {"free_vertices", c.free_vertices},
            {"excluded_by", c.excluded_by}};
    if (c.reduction_vertex) cj["vertex"] = *c.reduction_vertex;
    if (c.witness) cj["witness"] = to_json(*c.witness);
    cands.push_back(cj);
  }
  return {chain.ok() ? kOk : kCertificateFailure,
          Json{{"command", "assoc obstruct"},
               {"n", 7},
               {"no_av_representation", chain.ok()},
               {"steps", steps},
               {"candidates", cands}}};
}

Json error_report(const JobSpec& spec, const std::string& type, const std::string& msg) {
  return Json{{"command", spec.command}, {"error", Json{{"type", type}, {"message", msg}}}};
}

}  // namespace

JobResult run(const JobSpec& spec) {
  try {
    const auto& c = spec.command;
    if (c == "adjoint") return cmd_adjoint(spec);
    if (c == "residual") return cmd_residual(spec);
    if (c == "detrep2d") return cmd_detrep2d(spec);
    if (c == "verify-detrep") return cmd_verify_detrep(spec);
    if (c == "nice3d") return cmd_nice3d(spec);
    if (c == "singularity") return cmd_singularity(spec);
    if (c == "sweep") return cmd_sweep(spec);
    if (c == "fixture") return cmd_fixture(spec);
    if (c == "assoc-adjoint") return cmd_assoc_adjoint(spec);
    if (c == "assoc-verify-av") return cmd_assoc_verify_av(spec);
    if (c == "assoc-obstruct") return cmd_assoc_obstruct(spec);
    return {kInputError, error_report(spec, "input", "unknown command '" + c + "'")};
  } catch (const InputError& e) {
    return {kInputError, error_report(spec, "input", e.what())};
  } catch (const PreconditionError& e) {
    return {kInputError, error_report(spec, "precondition", e.what())};
  } catch (const nlohmann::json::exception& e) {
    return {kInputError, error_report(spec, "schema", e.what())};
  } catch (const CertificateError& e) {
    return {kCertificateFailure, error_report(spec, "certificate", e.what())};
  }
}

int run_and_write(const JobSpec& spec) {
  JobResult res = run(spec);
  const std::string text = res.report.dump(2) + "\n";
  if (spec.output) {
    std::ofstream out(*spec.output);
    if (!out) {
      std::cerr << "cannot write '" << *spec.output << "'\n";
      return kInputError;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return res.exit_code;
}

}  // namespace adjrep::cli
