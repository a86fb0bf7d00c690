// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes, or when the only failing
// sub-check is the known one: the printed heptagon matrix has determinant
// -16/49 times the printed quartic, so "scalar 1" cannot hold as printed.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adjrep/adjoint.hpp"
#include "adjrep/arrangements3d.hpp"
#include "adjrep/assoc.hpp"
#include "adjrep/detrep2d.hpp"
#include "adjrep/error.hpp"
#include "adjrep/fixtures.hpp"
#include "adjrep/random_polytopes.hpp"

using namespace adjrep;

namespace {

struct Outcome {
  bool ok = true;
  bool known_only = false;  // failed, but only on the documented sub-check
  std::string detail;
};

class Checks {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) failed_.push_back(what);
  }
  void known(bool cond, const std::string& what) {
    if (!cond) known_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  Outcome outcome() const {
    Outcome o;
    o.ok = failed_.empty() && known_.empty();
    o.known_only = failed_.empty() && !known_.empty();
    std::ostringstream os;
    for (const auto& n : notes_) os << n << "; ";
    for (const auto& f : known_) os << "known failure: " << f << "; ";
    for (const auto& f : failed_) os << "failed: " << f << "; ";
    o.detail = os.str();
    if (o.detail.size() >= 2) o.detail.resize(o.detail.size() - 2);
    return o;
  }

 private:
  std::vector<std::string> failed_, known_, notes_;
};

unsigned long long binom(unsigned n, unsigned k) {
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Line3 facet_line(const HPolytope& p, std::size_t i, std::size_t j) {
  return Line3::from_planes(p.ambient_form(i), p.ambient_form(j), std::make_pair(i, j));
}

QVector e4(std::size_t i) {
  QVector v(4, Rational(0));
  v[i] = Rational(1);
  return v;
}

void criterion1(Checks& c) {
  auto p = fixture_polytope("heptagon-ex59");
  Poly printed = fixture_poly("heptagon-ex59", "printed_adjoint").homogenize(0, 4);
  auto a = adjoint(p);
  c.expect(equal_up_to_scalar(a.homogeneous, printed).has_value(), "adjoint equals printed quartic up to scalar");

  auto s = verify_detrep(fixture_matrix("heptagon-ex59"), printed);
  c.expect(s.has_value(), "printed matrix is a determinantal representation");
  if (s) {
    c.note("printed matrix: det = " + s->str() + " * alpha");
    c.known(s->is_one(), "printed matrix scalar is " + s->str() + ", not 1");
  }

  auto poly = Polygon::from_polytope(p);
  auto rep = build_tridiagonal(poly);
  c.expect(rep.matrix.is_symmetric() && rep.matrix.is_tridiagonal(), "built matrix symmetric tridiagonal");
  c.expect(definiteness_certificate(rep.matrix, interior_point(p)), "built matrix definite at the centroid");
  for (std::size_t k = 1; k <= rep.matrix.size(); ++k) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k + 3; ++i) idx.push_back(i);
    Poly sub = polygon_adjoint(poly.sub_polygon(idx)).homogeneous;
    c.expect(equal_up_to_scalar(det(rep.matrix.leading(k)), sub).has_value(),
             "leading minor " + std::to_string(k) + " matches subpolygon adjoint");
  }
  // (0,0) lies on two edge lines of the polygon cut out by the forms, so the
  // definiteness check at (0,0) runs on the printed vertex heptagon.
  auto hv = Polygon::from_polytope(fixture_polytope("heptagon-ex59-vertices"));
  auto rv = build_tridiagonal(hv);
  c.expect(rv.matrix.is_symmetric() && rv.matrix.is_tridiagonal(), "vertex heptagon matrix symmetric tridiagonal");
  c.expect(definiteness_certificate(rv.matrix, {Rational(0), Rational(0)}), "vertex heptagon matrix definite at (0,0)");
}

void criterion2(Checks& c) {
  auto p = fixture_polytope("quadric-ex33");
  auto a = adjoint(p);
  c.expect(equal_up_to_scalar(a.homogeneous, fixture_poly("quadric-ex33", "printed_adjoint")).has_value(),
           "adjoint equals printed quadric up to scalar");
  auto [v, inc] = enumerate_vertices(p);
  auto r = residual_arrangement(p, inc);
  c.expect(r.count(3) == 7, "7 residual lines");
  c.expect(r.count(2) == 0, "0 residual planes");
  auto reg = p.registry();
  std::size_t rejected = 0, total = 0;
  for (std::size_t i = 0; i < p.num_facets(); ++i)
    for (std::size_t j = i + 1; j < p.num_facets(); ++j) {
      ++total;
      try {
        detrep_from_codim2_subspace(a.homogeneous, Poly::linear(reg, p.ambient_form(i)), Poly::linear(reg, p.ambient_form(j)));
      } catch (const PreconditionError&) {
        ++rejected;
      }
    }
  c.expect(rejected == total, "no codim-2 flat on the quadric");
  c.note(std::to_string(rejected) + "/" + std::to_string(total) + " codim-2 flats rejected");
}

void criterion3(Checks& c) {
  std::mt19937_64 rng(2024);
  int good = 0;
  for (int t = 0; t < 25; ++t) {
    std::size_t k = 6 + static_cast<std::size_t>(t % 5);
    auto p = random_simple_polytope3(k, rng);
    if (residual_lines(p).size() == binom(static_cast<unsigned>(k - 3), 2)) ++good;
  }
  c.expect(good == 25, "residual count law");
  c.note(std::to_string(good) + "/25 polytopes");
}

void criterion4(Checks& c) {
  std::mt19937_64 rng(4048);
  int good = 0;
  for (int t = 0; t < 12; ++t) {
    auto p = random_simple_polytope3(9 + static_cast<std::size_t>(t % 2), rng);
    auto alpha = adjoint(p).homogeneous;
    auto w = concurrency_singularity_certificate(p, alpha);
    if (!w) continue;
    auto lines = residual_lines(p);
    bool on = true;
    for (auto i : w->lines) on = on && lines[i].contains(w->point);
    if (on && is_zero(gradient_at(alpha, w->point))) ++good;
  }
  c.expect(good == 12, "singular triple points");
  c.note(std::to_string(good) + "/12 polytopes");
}

void criterion5(Checks& c) {
  auto p = fixture_polytope("octa8-ex58");
  LineArrangement lines;
  for (const auto& pr : fixture("octa8-ex58")["printed_residual_lines"])
    lines.push_back(facet_line(p, pr[0].get<std::size_t>(), pr[1].get<std::size_t>()));
  auto cert = is_nice(lines, 4);
  c.expect(cert && validate_nice_certificate(lines, *cert), "six printed lines nice for degree 4");
  c.expect(h0_vanishing_dimension(lines, 2) == 0, "h0 at degree 2 is 0");
  c.expect(h0_vanishing_dimension(lines, 3) >= 1, "h0 at degree 3 is positive");
  auto alpha = adjoint(p).homogeneous;
  auto s = verify_detrep(fixture_matrix("octa8-ex58"), alpha);
  c.expect(s && !s->is_zero(), "printed matrix det = c * alpha");
  if (s) c.note("c = " + s->str());
}

void criterion6(Checks& c) {
  std::vector<LineArrangement> cases = {
      {},
      {Line3(e4(0), e4(1))},
      {Line3(e4(0), e4(1)), Line3(e4(0), e4(2)), Line3(e4(1), e4(3))},
  };
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto& arr = cases[d - 1];
    auto cert = is_nice(arr, d);
    std::string tag = "D=" + std::to_string(d);
    c.expect(cert && validate_nice_certificate(arr, *cert), tag + " certified");
    c.expect(arr.size() == binom(static_cast<unsigned>(d), 2), tag + " line count");
    if (d >= 2) c.expect(h0_vanishing_dimension(arr, static_cast<int>(d) - 2) == 0, tag + " h0 at D-2");
    c.expect(h0_vanishing_dimension(arr, static_cast<int>(d) - 1) >= 1, tag + " h0 at D-1");
  }
}

void criterion7(Checks& c) {
  Poly a2 = fixture_poly("assoc-n6", "adj2");
  Poly a3 = fixture_poly("assoc-n6", "adj3");
  c.expect(a2.num_terms() == 5 && universal_adjoint_assoc(5).canonical() == a2.remap(assoc_registry(5)).canonical(),
           "Adj2 matches");
  c.expect(a3.num_terms() == 14 && universal_adjoint_assoc(6).canonical() == a3.canonical(), "Adj3 matches");
  auto reg = fixture_registry("assoc-n6");
  std::vector<std::size_t> primary;
  for (const auto& n : fixture("assoc-n6")["primary"]) primary.push_back(reg->index(n.get<std::string>()));
  auto m = fixture_matrix("assoc-n6", "matrix");
  c.expect(is_av_representation(m, a3, primary).has_value(), "6x6 matrix is an AV-representation of Adj3");
  std::vector<std::size_t> p3(primary.begin(), primary.begin() + 3);
  c.expect(is_av_representation(m.leading(3), a2.remap(reg), p3).has_value(), "3x3 block is one of Adj2");
  auto n4 = enumerate_triangulations(4).size(), n6 = enumerate_triangulations(6).size(),
       n7 = enumerate_triangulations(7).size();
  c.expect(n4 == 2 && n6 == 14 && n7 == 42, "triangulation counts");
  c.note("counts " + std::to_string(n4) + "/" + std::to_string(n6) + "/" + std::to_string(n7));
}

void criterion8(Checks& c) {
  auto reg = fixture_registry("assoc-n6");
  Poly a3 = fixture_poly("assoc-n6", "adj3");
  Poly g = fixture_poly("assoc-n6", "G");
  Poly d = rayleigh_difference(a3, reg->index("X13"), reg->index("X15"));
  c.expect(d == fixture_poly("assoc-n6", "G_prefactor") * g, "Delta_13,15 = -X14X24X25X26X36X46 * G");
  auto r = affine_factor_obstruction(g, reg->index("X35"));
  c.expect(r.verdict == Verdict::Obstructed, "G obstructed in X35");
  Poly g2 = fixture_poly("assoc-n6", "G2");
  c.expect(g.coefficient_of(reg->index("X35"), 2) == g2, "G2 is the X35^2 coefficient");
  c.expect(multiaffine_delta_irreducible(g2), "G2 Delta-irreducible");
  Poly a2 = fixture_poly("assoc-n6", "adj2");
  auto r2 = a2.registry();
  c.expect(rayleigh_difference(a2, r2->index("X13"), r2->index("X14")) ==
               Poly::parse(r2, fixture("assoc-n6")["delta_13_14_adj2"].get<std::string>()),
           "Delta_13,14(Adj2) matches");
  auto chain = heptagon_obstruction_chain();
  c.expect(chain.ok(), "heptagon certificate chain");
}

void criterion9(Checks& c) {
  std::mt19937_64 rng(8096);
  int warren = 0;
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 6 + static_cast<std::size_t>(t % 4);
    auto q = random_convex_polygon(n, rng);
    if (warren_adjoint_2d(q, fan_triangulation(n)) == warren_adjoint_2d(q, ear_clipping_triangulation(n))) ++warren;
  }
  c.expect(warren == 50, "Warren triangulation independence");

  std::vector<HPolytope> polys{fixture_polytope("heptagon-ex59"), fixture_polytope("quadric-ex33"),
                               fixture_polytope("octa8-ex58")};
  for (int t = 0; t < 6; ++t) polys.push_back(random_simple_polytope3(6 + static_cast<std::size_t>(t), rng));
  std::size_t flats = 0, vanishing = 0;
  for (const auto& p : polys) {
    auto alpha = adjoint(p).homogeneous;
    auto [v, inc] = enumerate_vertices(p);
    for (const auto& f : residual_arrangement(p, inc).flats) {
      ++flats;
      if (vanishes_on_flat(alpha, f)) ++vanishing;
    }
  }
  c.expect(flats == vanishing, "vanishing on residual flats");

  int smooth = 0, tangent_ok = 0;
  while (smooth < 20) {
    std::size_t n = 5 + static_cast<std::size_t>(smooth % 4);
    auto q = random_convex_polygon(n, rng, 300);
    if (!adjoint_smooth_at_residual_points(q)) continue;
    ++smooth;
    bool all = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j)
        if (!(i == 0 && j == n - 1)) all = all && tangency_certificate(q, i, j);
    if (all) ++tangent_ok;
  }
  c.expect(tangent_ok == 20, "tangency at residual points");

  bool contact = true;
  for (std::size_t n = 5; n <= 9; ++n) {
    auto rep = contact_certificate(random_convex_polygon(n, rng, 300));
    contact = contact && rep.ok() && rep.expected == (n - 3) * (n - 4) / 2;
  }
  c.expect(contact, "contact counts n = 5..9");

  bool red = true;
  for (unsigned n = 5; n <= 7; ++n) red = red && derivative_reduction_holds(n);
  c.expect(red, "derivative reduction n = 5, 6, 7");
  c.note("warren " + std::to_string(warren) + "/50, flats " + std::to_string(vanishing) + "/" + std::to_string(flats) +
         ", tangency " + std::to_string(tangent_ok) + "/20");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria = {
      {"heptagon pipeline", criterion1},
      {"4D quadric counterexample", criterion2},
      {"residual count law", criterion3},
      {"singularity certificates", criterion4},
      {"octahedral example", criterion5},
      {"nice-arrangement axioms", criterion6},
      {"associahedron fixtures", criterion7},
      {"obstruction chain", criterion8},
      {"property suites", criterion9},
  };
  std::vector<Outcome> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    Outcome o = c.outcome();
    results.push_back(o);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  // 10: the classification and asymptotic results are not re-proved; they are
  // exercised only through criteria 3-5.
  bool covered = results[2].ok && results[3].ok && results[4].ok;
  std::cout << (covered ? "PASS" : "FAIL")
            << " 10 non-reproducible content (exercised through criteria 3-5 only, not re-proved)\n";

  int hard = covered ? 0 : 1, known = 0;
  for (const auto& o : results) {
    if (o.ok) continue;
    if (o.known_only) ++known;
    else ++hard;
  }
  int passed = 10 - hard - known;
  std::cout << passed << "/10 criteria pass";
  if (known) std::cout << "; " << known << " fail only on the known printed-matrix scalar";
  std::cout << "\n";
  return hard == 0 ? 0 : 1;
}
