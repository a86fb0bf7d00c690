#include <doctest.h>

#include <random>
#include <set>

#include "adjrep/adjoint.hpp"
#include "adjrep/error.hpp"
#include "adjrep/fixtures.hpp"
#include "adjrep/random_polytopes.hpp"
#include "oracles.hpp"

using namespace adjrep;

namespace {

QPoint pt(long a, long b) { return {Rational(a), Rational(b)}; }

HPolytope unit_square() {
  return HPolytope(2, {{{Rational(1), Rational(0)}, Rational(0)},
                       {{Rational(0), Rational(1)}, Rational(0)},
                       {{Rational(-1), Rational(0)}, Rational(1)},
                       {{Rational(0), Rational(-1)}, Rational(1)}});
}

HPolytope triangle2() {
  return HPolytope(2, {{{Rational(1), Rational(0)}, Rational(0)},
                       {{Rational(0), Rational(1)}, Rational(0)},
                       {{Rational(-1), Rational(-1)}, Rational(1)}});
}

// Residual points of a polygon: non-adjacent edge lines, homogeneous.
std::vector<QVector> residual_points(const Polygon& q) {
  std::vector<QVector> out;
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const Facet& a = q.edge(i);
      const Facet& b = q.edge(j);
      out.push_back(oracle::join({a.offset, a.normal[0], a.normal[1]}, {b.offset, b.normal[0], b.normal[1]}));
    }
  return out;
}

}  // namespace

TEST_CASE("universal adjoint of the unit square") {
  auto p = unit_square();
  auto [v, inc] = enumerate_vertices(p);
  auto reg = facet_registry(4);
  // Vertex sum by hand: r2r3 + r0r3 + r0r1 + r1r2.
  CHECK(universal_adjoint(p, inc).poly == Poly::parse(reg, "r2r3+r0r3+r0r1+r1r2"));
  auto a = adjoint(p);
  CHECK(a.degree == 1);
  CHECK(a.affine == Poly::constant(a.affine.registry(), Rational(1)));
  CHECK(a.homogeneous == Poly::parse(projective_registry(2), "x0"));
}

TEST_CASE("universal adjoint of a simplex is linear") {
  auto p = triangle2();
  auto [v, inc] = enumerate_vertices(p);
  CHECK(universal_adjoint(p, inc).poly == Poly::parse(facet_registry(3), "r0+r1+r2"));
  CHECK(adjoint(p).homogeneous.is_constant());
  CHECK(adjoint(p).degree == 0);
}

TEST_CASE("heptagon adjoint matches the printed quartic") {
  auto reg = fixture_registry("heptagon-ex59");
  Poly printed = fixture_poly("heptagon-ex59", "printed_adjoint").homogenize(0, 4);
  auto p = fixture_polytope("heptagon-ex59");
  auto a = adjoint(p);
  CHECK(a.degree == 4);
  CHECK(equal_up_to_scalar(a.homogeneous, printed));
  CHECK(equal_up_to_scalar(polygon_adjoint(Polygon::from_polytope(p)).homogeneous, printed));
}

TEST_CASE("quadric example adjoint") {
  Poly printed = fixture_poly("quadric-ex33", "printed_adjoint");
  auto p = fixture_polytope("quadric-ex33");
  auto a = adjoint(p);
  CHECK(a.degree == 2);
  CHECK(equal_up_to_scalar(a.homogeneous, printed));
  auto [v, inc] = enumerate_vertices(p);
  auto r = residual_arrangement(p, inc);
  for (const auto* l : r.lines()) CHECK(vanishes_on_flat(a.homogeneous, *l));
}

TEST_CASE("polygon adjoint of small polygons") {
  auto sq = Polygon::from_polytope(unit_square());
  CHECK(equal_up_to_scalar(polygon_adjoint(sq).homogeneous, Poly::parse(projective_registry(2), "x0")));

  auto quad = Polygon::from_vertices({pt(0, 0), pt(2, 0), pt(2, 1), pt(0, 2)});
  auto a = polygon_adjoint(quad).homogeneous;
  CHECK(a.degree() == 1);
  auto rp = residual_points(quad);
  CHECK(rp.size() == 2);
  for (const auto& q : rp) CHECK(a.evaluate(q).is_zero());
}

TEST_CASE("Warren adjoint") {
  auto tri = Polygon::from_vertices({pt(0, 0), pt(4, 0), pt(0, 3)});
  CHECK(warren_adjoint_2d(tri, {{0, 1, 2}}) == Poly::constant(projective_registry(2), Rational(6)));

  auto sq = Polygon::from_polytope(unit_square());
  CHECK(warren_adjoint_2d(sq, fan_triangulation(4, 0)) == warren_adjoint_2d(sq, fan_triangulation(4, 1)));

  auto h = Polygon::from_polytope(fixture_polytope("heptagon-ex59"));
  auto fan = fan_triangulation(7);
  auto ear = ear_clipping_triangulation(7);
  CHECK(std::set<Triangle>(fan.begin(), fan.end()) != std::set<Triangle>(ear.begin(), ear.end()));
  CHECK(warren_adjoint_2d(h, fan) == warren_adjoint_2d(h, ear));
  CHECK_THROWS_AS(check_triangulation(h, {{0, 1, 2}}), PreconditionError);
}

TEST_CASE("vanishing on flats") {
  auto reg = projective_registry(2);
  CHECK(vanishes_on_span(Poly::parse(reg, "x0"), {{Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(1)}}));
  auto p = fixture_polytope("heptagon-ex59");
  auto a = adjoint(p).homogeneous;
  auto [v, inc] = enumerate_vertices(p);
  auto r = residual_arrangement(p, inc);
  CHECK(r.flats.size() == 14);
  for (const auto& f : r.flats) CHECK(vanishes_on_flat(a, f));
}

TEST_CASE("property: Warren triangulation independence on 50 random polygons") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 50; ++it) {
    std::size_t n = 6 + static_cast<std::size_t>(it % 4);
    auto q = random_convex_polygon(n, rng);
    CHECK(warren_adjoint_2d(q, fan_triangulation(n, 0)) == warren_adjoint_2d(q, ear_clipping_triangulation(n)));
    CHECK(warren_adjoint_2d(q, fan_triangulation(n, 0)) == warren_adjoint_2d(q, fan_triangulation(n, n / 2)));
  }
}

TEST_CASE("property: the three polygon adjoints agree with the interpolation oracle") {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 10; ++it) {
    std::size_t n = 4 + static_cast<std::size_t>(it % 5);
    auto q = random_convex_polygon(n, rng, 60);
    auto reg = projective_registry(2);
    auto basis = oracle::interpolate(reg, static_cast<unsigned>(n - 3), residual_points(q));
    REQUIRE(basis.size() == 1);
    Poly a = polygon_adjoint(q).homogeneous;
    CHECK(a.degree() == static_cast<int>(n) - 3);
    CHECK(equal_up_to_scalar(a, basis[0]));
    CHECK(equal_up_to_scalar(adjoint(q.to_hpolytope()).homogeneous, a));
    CHECK(equal_up_to_scalar(polar_warren_adjoint(q).homogenize(0, static_cast<int>(n) - 3), a));
    CHECK(equal_up_to_scalar(polar_warren_adjoint(q, true).homogenize(0, static_cast<int>(n) - 3), a));
  }
}

TEST_CASE("property: 3-polytope adjoints vanish on every residual flat") {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 8; ++it) {
    std::size_t k = 6 + static_cast<std::size_t>(it % 4);
    auto p = random_simple_polytope3(k, rng);
    auto a = adjoint(p);
    CHECK(a.degree == static_cast<int>(k) - 4);
    CHECK(a.homogeneous.degree() == static_cast<int>(k) - 4);
    auto [v, inc] = enumerate_vertices(p);
    for (const auto& f : residual_arrangement(p, inc).flats) CHECK(vanishes_on_flat(a.homogeneous, f));
  }
}

TEST_CASE("property: scaling a facet form rescales the adjoint") {
  std::mt19937_64 rng(34);
  for (int it = 0; it < 5; ++it) {
    auto p = random_simple_polytope3(7, rng);
    auto facets = p.facets();
    facets[static_cast<std::size_t>(it) % facets.size()].normal = [&] {
      QVector n = facets[static_cast<std::size_t>(it) % facets.size()].normal;
      for (auto& c : n) c *= Rational(7, 3);
      return n;
    }();
    facets[static_cast<std::size_t>(it) % facets.size()].offset *= Rational(7, 3);
    HPolytope scaled(3, facets);
    auto a = adjoint(p).affine;
    auto b = adjoint(scaled).affine;
    CHECK(equal_up_to_scalar(a, b));
  }
}

TEST_CASE("property: universal adjoint monomials match vertex incidences") {
  std::mt19937_64 rng(35);
  for (int it = 0; it < 5; ++it) {
    auto p = random_simple_polytope3(8, rng);
    auto [v, inc] = enumerate_vertices(p);
    Poly u = universal_adjoint(p, inc).poly;
    CHECK(u.is_multiaffine());
    std::set<std::vector<std::size_t>> omitted, incident;
    for (const auto& [e, c] : u.terms()) {
      std::vector<std::size_t> miss;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == 0) miss.push_back(i);
      omitted.insert(miss);
      CHECK(c.sign() > 0);
    }
    for (const auto& f : inc.facets_of_vertex) incident.insert(f);
    CHECK(omitted == incident);
  }
}
