#include "adjrep/random_polytopes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "adjrep/error.hpp"

namespace adjrep {

HPolytope random_simple_polytope3(std::size_t k, std::mt19937_64& rng, int radius) {
  if (k < 4) throw PreconditionError("a 3-polytope needs at least four facets");
  std::uniform_int_distribution<int> coord(-radius, radius);
  const long lo = static_cast<long>(radius - 2) * (radius - 2);
  const long hi = static_cast<long>(radius) * radius;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Facet> facets;
    while (facets.size() < k) {
      int a = coord(rng), b = coord(rng), c = coord(rng);
      long n2 = static_cast<long>(a) * a + static_cast<long>(b) * b + static_cast<long>(c) * c;
      if (n2 < lo || n2 > hi) continue;
      facets.push_back(Facet{QVector{Rational(a), Rational(b), Rational(c)}, Rational(1)});
    }
    try {
      HPolytope p(3, std::move(facets), "random-" + std::to_string(k));
      if (!is_simple_arrangement(p).simple) continue;
      return p;
    } catch (const InputError&) {
    } catch (const PreconditionError&) {
    }
  }
  throw PreconditionError("no simple polytope found after 10000 draws");
}

Polygon random_convex_polygon(std::size_t n, std::mt19937_64& rng, int radius) {
  if (n < 3) throw PreconditionError("a polygon needs at least three vertices");
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<double> t(n);
    for (auto& a : t) a = angle(rng);
    std::sort(t.begin(), t.end());
    std::vector<QPoint> pts;
    for (double a : t) {
      pts.push_back(QPoint{Rational(std::lround(radius * std::cos(a))), Rational(std::lround(radius * std::sin(a)))});
    }
    try {
      return Polygon::from_vertices(std::move(pts));
    } catch (const InputError&) {
    } catch (const PreconditionError&) {
    }
  }
  throw PreconditionError("no convex polygon found after 10000 draws");
}

}  // namespace adjrep
