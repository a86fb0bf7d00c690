#include <doctest.h>

#include <random>

#include "adjrep/adjoint.hpp"
#include "adjrep/arrangements3d.hpp"
#include "adjrep/detrep2d.hpp"
#include "adjrep/error.hpp"
#include "adjrep/fixtures.hpp"
#include "adjrep/random_polytopes.hpp"
#include "oracles.hpp"

using namespace adjrep;

namespace {

QVector e(std::size_t i) {
  QVector v(4, Rational(0));
  v[i] = Rational(1);
  return v;
}

QVector v4(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

Line3 facet_line(const HPolytope& p, std::size_t i, std::size_t j) {
  return Line3::from_planes(p.ambient_form(i), p.ambient_form(j), std::make_pair(i, j));
}

LineArrangement printed_octa_lines() {
  auto p = fixture_polytope("octa8-ex58");
  LineArrangement out;
  for (const auto& pr : fixture("octa8-ex58")["printed_residual_lines"]) {
    out.push_back(facet_line(p, pr[0].get<std::size_t>(), pr[1].get<std::size_t>()));
  }
  return out;
}

// A rational realization of a non-simple 7-facet polytope: pyramid-like
// base plus a roof, with three residual lines through one point.
HPolytope nonsimple7() {
  auto f = [](long a, long b, long c, Rational off) { return Facet{{Rational(a), Rational(b), Rational(c)}, off}; };
  return HPolytope(3, {f(0, 0, 1, Rational(0)), f(-1, 0, -1, Rational(1)), f(1, -1, 0, Rational(3, 2)),
                       f(-1, -1, 0, Rational(3, 2)), f(0, 1, -1, Rational(1)), f(0, -1, -1, Rational(1)),
                       f(1, 0, -1, Rational(1))},
                   "nonsimple7");
}

std::size_t line_index(const LineArrangement& c, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k].facets == std::make_pair(i, j)) return k;
  FAIL("residual line not found");
  return 0;
}

void check_nice_invariants(const LineArrangement& c, std::size_t degree) {
  auto cert = is_nice(c, degree);
  REQUIRE(cert);
  CHECK(validate_nice_certificate(c, *cert));
  CHECK(c.size() == oracle::binom(static_cast<unsigned>(degree), 2));
  if (degree >= 2) CHECK(h0_vanishing_dimension(c, static_cast<int>(degree) - 2) == 0);
  CHECK(h0_vanishing_dimension(c, static_cast<int>(degree) - 1) >= 1);
}

}  // namespace

TEST_CASE("lines and incidences") {
  Line3 a(e(0), e(1)), b(e(0), e(2)), c(e(1), e(3)), d(e(2), e(3));
  CHECK(lines_meet(a, b));
  CHECK_FALSE(lines_meet(b, c));
  CHECK(intersection_point(a, b) == e(0));
  CHECK(a.same_as(Line3(v4(1, 1, 0, 0), v4(1, -1, 0, 0))));
  CHECK(a.in_plane(e(3)));
  CHECK_THROWS_AS(check_arrangement({a, Line3(v4(1, 1, 0, 0), e(1))}), InputError);
  CHECK_FALSE(three_concurrent({a, b, c, d}));
  CHECK(three_concurrent({a, b, Line3(e(0), e(3))}));
}

TEST_CASE("nice arrangements for D = 1, 2, 3") {
  check_nice_invariants({}, 1);
  check_nice_invariants({Line3(e(0), e(1))}, 2);
  LineArrangement three{Line3(e(0), e(1)), Line3(e(0), e(2)), Line3(e(1), e(3))};
  check_nice_invariants(three, 3);
  LineArrangement concurrent{Line3(e(0), e(1)), Line3(e(0), e(2)), Line3(e(0), e(3))};
  CHECK_FALSE(is_nice(concurrent, 3));
  CHECK_FALSE(is_nice(three, 2));
}

TEST_CASE("h0 of simple configurations") {
  CHECK(h0_vanishing_dimension({}, 0) == 1);
  CHECK(h0_vanishing_dimension({Line3(e(0), e(1))}, 1) == 2);
  // Oracle: interpolation through sample points on the lines.
  LineArrangement three{Line3(e(0), e(1)), Line3(e(0), e(2)), Line3(e(1), e(3))};
  auto reg = projective_registry(3);
  for (unsigned m = 0; m <= 3; ++m) {
    std::vector<QVector> pts;
    for (const auto& l : three)
      for (const auto& q : oracle::points_on_line(l.p, l.q, m)) pts.push_back(q);
    CHECK(h0_vanishing_dimension(three, static_cast<int>(m)) == oracle::interpolate(reg, m, pts).size());
  }
}

TEST_CASE("octahedral example: printed lines, matrix and nice subarrangement") {
  auto p = fixture_polytope("octa8-ex58");
  auto alpha = adjoint(p).homogeneous;
  CHECK(alpha.degree() == 4);
  auto printed = printed_octa_lines();
  REQUIRE(printed.size() == 6);
  check_nice_invariants(printed, 4);
  for (const auto& l : printed) CHECK(vanishes_on_span(alpha, {l.p, l.q}));

  auto m = fixture_matrix("octa8-ex58");
  auto c = verify_detrep(m, alpha);
  REQUIRE(c);
  CHECK_FALSE(c->is_zero());

  auto res = residual_lines(p);
  CHECK(res.size() == 10);
  for (const auto& l : printed) {
    bool found = false;
    for (const auto& r : res) found = found || r.same_as(l);
    CHECK(found);
  }
  auto sub = find_nice_subarrangement(res, 4);
  REQUIRE(sub);
  LineArrangement chosen;
  for (auto i : sub->subset) chosen.push_back(res[i]);
  CHECK(validate_nice_certificate(chosen, sub->certificate));
  CHECK(is_nice(chosen, 4));
  CHECK_FALSE(concurrency_singularity_certificate(p, alpha));
}

TEST_CASE("non-simple realization: nice triple and concurrent triple") {
  auto p = nonsimple7();
  auto res = residual_lines(p);
  CHECK(res.size() == 5);
  LineArrangement nice3{res[line_index(res, 1, 2)], res[line_index(res, 2, 3)], res[line_index(res, 3, 4)]};
  check_nice_invariants(nice3, 3);
  LineArrangement conc{res[line_index(res, 2, 3)], res[line_index(res, 2, 4)], res[line_index(res, 3, 4)]};
  CHECK(three_concurrent(conc));
}

TEST_CASE("property: singularity certificates on random polytopes with k >= 9") {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 10; ++it) {
    auto p = random_simple_polytope3(9 + static_cast<std::size_t>(it % 2), rng);
    auto alpha = adjoint(p).homogeneous;
    auto w = concurrency_singularity_certificate(p, alpha);
    REQUIRE(w);
    auto lines = residual_lines(p);
    for (auto i : w->lines) CHECK(lines[i].contains(w->point));
    CHECK(is_zero(gradient_at(alpha, w->point)));
  }
}

TEST_CASE("property: nice certificates re-validate on random residual arrangements") {
  std::mt19937_64 rng(52);
  for (int it = 0; it < 4; ++it) {
    auto p = random_simple_polytope3(7, rng);
    auto res = residual_lines(p);
    REQUIRE(res.size() == 6);
    auto sub = find_nice_subarrangement(res, 3);
    if (!sub) continue;
    LineArrangement chosen;
    for (auto i : sub->subset) chosen.push_back(res[i]);
    check_nice_invariants(chosen, 3);
  }
}

TEST_CASE("determinantal quadrics from codimension-2 subspaces") {
  auto reg = projective_registry(3);
  Poly f = Poly::parse(reg, "x0x3-x1x2");
  auto m = detrep_from_codim2_subspace(f, Poly::parse(reg, "x0"), Poly::parse(reg, "x1"));
  CHECK(det(m) == f);
  CHECK(m(0, 0) == Poly::parse(reg, "x0"));
  CHECK(m(0, 1) == Poly::parse(reg, "x1"));

  Poly g = Poly::parse(reg, "x0^2+x1^2-x2^2-x3^2");
  auto m2 = detrep_from_codim2_subspace(g, Poly::parse(reg, "x0+x2"), Poly::parse(reg, "x1+x3"));
  CHECK(det(m2) == g);
  CHECK(det(PolyMatrix::parse(reg, {{"x0+x2", "x1+x3"}, {"-x1+x3", "x0-x2"}})) == g);
  CHECK_THROWS_AS(detrep_from_codim2_subspace(g, Poly::parse(reg, "x0"), Poly::parse(reg, "x1")), PreconditionError);
}

// Product of two triangles with the vertex at the origin cut off by a generic
// hyperplane T; {T = 0, y1 + y2 = 1} misses the polytope.
TEST_CASE("truncated product of triangles: residual plane gives a 2x2 representation") {
  auto f = [](long a, long b, long c, long d, Rational off) {
    return Facet{{Rational(a), Rational(b), Rational(c), Rational(d)}, off};
  };
  HPolytope p(4, {f(1, 0, 0, 0, Rational(0)), f(0, 1, 0, 0, Rational(0)), f(-1, -1, 0, 0, Rational(1)),
                  f(0, 0, 1, 0, Rational(0)), f(0, 0, 0, 1, Rational(0)), f(0, 0, -1, -1, Rational(1)),
                  f(1, 2, 3, 5, Rational(-1, 2))});
  auto a = adjoint(p);
  REQUIRE(a.degree == 2);
  auto [v, inc] = enumerate_vertices(p);
  auto r = residual_arrangement(p, inc);
  bool has_plane = false;
  for (const auto* fl : r.of_codim(2)) has_plane = has_plane || (fl->facets == std::vector<std::size_t>{2, 6});
  CHECK(has_plane);
  auto reg = p.registry();
  Poly t = Poly::linear(reg, p.ambient_form(6));
  Poly l = Poly::linear(reg, p.ambient_form(2));
  auto m = detrep_from_codim2_subspace(a.homogeneous, t, l);
  CHECK(oracle::leibniz_det(m) == a.homogeneous);
}

TEST_CASE("quadric example: no codimension-2 flat on the quadric") {
  auto p = fixture_polytope("quadric-ex33");
  auto alpha = adjoint(p).homogeneous;
  auto reg = p.registry();
  for (std::size_t i = 0; i < p.num_facets(); ++i)
    for (std::size_t j = i + 1; j < p.num_facets(); ++j) {
      CHECK_THROWS_AS(detrep_from_codim2_subspace(alpha, Poly::linear(reg, p.ambient_form(i)),
                                                  Poly::linear(reg, p.ambient_form(j))),
                      PreconditionError);
    }
}
