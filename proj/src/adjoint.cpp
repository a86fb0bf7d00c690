#include "adjrep/adjoint.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "adjrep/error.hpp"

namespace adjrep {

RegistryPtr facet_registry(std::size_t k) { return numbered_registry("r", k); }

UniversalAdjoint universal_adjoint(const HPolytope& p, const IncidenceData& inc) {
  const std::size_t k = p.num_facets();
  auto reg = facet_registry(k);
  Poly sum(reg);
  for (const auto& fv : inc.facets_of_vertex) {
    if (fv.size() != p.dim()) throw PreconditionError("universal adjoint needs a simple polytope");
    QMatrix u;
    for (auto i : fv) u.push_back(p.facet(i).normal);
    Exponents e(k, 1);
    for (auto i : fv) e[i] = 0;
    sum.add_term(e, determinant(u).abs());
  }
  return UniversalAdjoint{std::move(sum)};
}

AdjointResult adjoint(const HPolytope& p) {
  auto [vrep, inc] = enumerate_vertices(p);
  auto simple = is_simple_arrangement(p);
  if (!simple.simple) throw PreconditionError("adjoint needs a simple facet hyperplane arrangement");
  UniversalAdjoint ua = universal_adjoint(p, inc);

  const int k = static_cast<int>(p.num_facets());
  const int n = static_cast<int>(p.dim());
  const int d = k - n - 1;
  std::map<std::size_t, Poly> forms;
  for (std::size_t i = 0; i < p.num_facets(); ++i) forms.emplace(i, p.affine_form(i));
  Poly affine = ua.poly.substitute(forms);
  // Top-degree parts cancel; residual flats at infinity can lower the affine degree further.
  if (affine.is_zero() || affine.degree() > d) {
    throw CertificateError("specialized universal adjoint has degree " + std::to_string(affine.degree()) +
                           ", expected at most " + std::to_string(d));
  }
  Poly chart_h = affine.homogenize(0, d).canonical();

  Poly ambient = chart_h;
  if (p.has_chart()) {
    auto reg = p.registry();
    QMatrix t = p.chart();
    std::map<std::size_t, Poly> y_of_x;
    for (std::size_t j = 0; j < reg->size(); ++j) y_of_x.emplace(j, Poly::linear(reg, t[j]));
    ambient = chart_h.substitute(y_of_x).canonical();
  }
  std::map<std::size_t, Poly> dehom{{0, Poly::constant(p.registry(), Rational(1))}};
  return AdjointResult{chart_h.substitute(dehom), ambient, d};
}

AdjointResult polygon_adjoint(const Polygon& p) {
  const std::size_t n = p.size();
  auto reg = p.registry();
  // Affine edge forms: the top-degree parts cancel, leaving degree n-3.
  std::vector<Poly> l;
  for (std::size_t i = 0; i < n; ++i) {
    const Facet& e = p.edge(i);
    l.push_back(Poly::linear(reg, QVector{Rational(0), e.normal[0], e.normal[1]}) + Poly::constant(reg, e.offset));
  }
  Poly alpha(reg);
  for (std::size_t i = 0; i < n; ++i) {
    const QVector& w0 = p.edge(i).normal;
    const QVector& w1 = p.edge(i + 1).normal;
    Rational det = w0[0] * w1[1] - w0[1] * w1[0];
    if (det.sign() <= 0) throw PreconditionError("edge normals are not in counterclockwise order");
    Poly term = Poly::constant(reg, det);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && j != (i + 1) % n) term *= l[j];
    }
    alpha += term;
  }
  const int d = static_cast<int>(n) - 3;
  if (alpha.is_zero() || alpha.degree() > d) throw CertificateError("polygon adjoint has unexpected degree");
  return AdjointResult{alpha, alpha.homogenize(0, d), d};
}

// ---------------------------------------------------------------- Warren

Triangulation2D fan_triangulation(std::size_t n, std::size_t apex) {
  Triangulation2D t;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    t.push_back({apex % n, (apex + i) % n, (apex + i + 1) % n});
  }
  return t;
}

Triangulation2D ear_clipping_triangulation(std::size_t n) {
  std::vector<std::size_t> left(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = i;
  Triangulation2D t;
  for (std::size_t step = 0; left.size() > 3; ++step) {
    const std::size_t m = left.size();
    const std::size_t i = (2 * step + 1) % m;
    t.push_back({left[(i + m - 1) % m], left[i], left[(i + 1) % m]});
    left.erase(left.begin() + static_cast<long>(i));
  }
  if (left.size() == 3) t.push_back({left[0], left[1], left[2]});
  return t;
}

void check_triangulation(const Polygon& q, const Triangulation2D& t) {
  const std::size_t n = q.size();
  if (t.size() != n - 2) throw PreconditionError("triangulation must have n-2 triangles");
  std::set<std::pair<std::size_t, std::size_t>> chords;
  Rational area(0);
  for (const auto& tri : t) {
    for (auto v : tri) {
      if (v >= n) throw PreconditionError("triangle vertex out of range");
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw PreconditionError("degenerate triangle");
    }
    area += orient2d(q.vertex(tri[0]), q.vertex(tri[1]), q.vertex(tri[2])).abs();
    for (int e = 0; e < 3; ++e) {
      auto a = tri[e], b = tri[(e + 1) % 3];
      chords.insert({std::min(a, b), std::max(a, b)});
    }
  }
  for (const auto& [a, b] : chords) {
    for (const auto& [c, d] : chords) {
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
        throw PreconditionError("triangles overlap (crossing chords)");
      }
    }
  }
  Rational total(0);
  for (std::size_t i = 1; i + 1 < n; ++i) total += orient2d(q.vertex(0), q.vertex(i), q.vertex(i + 1));
  if (area != total) throw PreconditionError("triangles do not cover the polygon");
}

Poly warren_adjoint_2d(const Polygon& q, const Triangulation2D& t) {
  check_triangulation(q, t);
  auto reg = q.registry();
  std::vector<Poly> ell;
  for (std::size_t v = 0; v < q.size(); ++v) {
    const QPoint& p = q.vertex(v);
    ell.push_back(Poly::linear(reg, QVector{Rational(1), -p[0], -p[1]}));
  }
  Poly adj(reg);
  for (const auto& tri : t) {
    Rational vol = orient2d(q.vertex(tri[0]), q.vertex(tri[1]), q.vertex(tri[2])).abs() / Rational(2);
    Poly term = Poly::constant(reg, vol);
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (v != tri[0] && v != tri[1] && v != tri[2]) term *= ell[v];
    }
    adj += term;
  }
  return adj;
}

Polygon polar_dual(const Polygon& p) {
  std::vector<QPoint> dual;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Facet& f = p.edge(i);
    if (f.offset.sign() <= 0) throw PreconditionError("polar dual needs the origin in the interior");
    dual.push_back(QPoint{-f.normal[0] / f.offset, -f.normal[1] / f.offset});
  }
  return Polygon::from_vertices(std::move(dual));
}

Poly polar_warren_adjoint(const Polygon& p, bool use_ear_clipping) {
  QPoint c(2, Rational(0));
  for (const auto& v : p.vertices()) {
    c[0] += v[0];
    c[1] += v[1];
  }
  Rational inv = Rational(static_cast<long>(p.size())).inverse();
  c[0] *= inv;
  c[1] *= inv;
  std::vector<QPoint> shifted;
  for (const auto& v : p.vertices()) shifted.push_back(QPoint{v[0] - c[0], v[1] - c[1]});
  Polygon dual = polar_dual(Polygon::from_vertices(std::move(shifted)));
  auto t = use_ear_clipping ? ear_clipping_triangulation(dual.size()) : fan_triangulation(dual.size());
  Poly adj = warren_adjoint_2d(dual, t);
  auto reg = p.registry();
  std::map<std::size_t, Poly> back{
      {0, Poly::variable(reg, 0)},
      {1, Poly::linear(reg, QVector{-c[0], Rational(1), Rational(0)})},
      {2, Poly::linear(reg, QVector{-c[1], Rational(0), Rational(1)})},
  };
  return adj.substitute(back);
}

// ---------------------------------------------------------------- flats

bool vanishes_on_span(const Poly& f, const QMatrix& basis) {
  if (basis.empty()) return true;
  const std::size_t dim = f.num_vars();
  for (const auto& b : basis) {
    if (b.size() != dim) throw InputError("flat basis does not match the polynomial's ambient space");
  }
  auto params = numbered_registry("s", basis.size());
  std::map<std::size_t, Poly> sub;
  for (std::size_t i = 0; i < dim; ++i) {
    QVector coeffs(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] = basis[j][i];
    sub.emplace(i, Poly::linear(params, coeffs));
  }
  return f.substitute(sub).is_zero();
}

bool vanishes_on_flat(const Poly& f, const Flat& fl) { return vanishes_on_span(f, fl.basis); }

}  // namespace adjrep
