#include "adjrep/polytope.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "adjrep/error.hpp"

namespace adjrep {

RegistryPtr projective_registry(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, RegistryPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache.emplace(n, numbered_registry("x", n + 1)).first->second;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------- HPolytope

HPolytope::HPolytope(std::size_t dim, std::vector<Facet> facets, std::string name,
                     std::optional<QMatrix> chart, bool validate)
    : dim_(dim), facets_(std::move(facets)), name_(std::move(name)), chart_(std::move(chart)) {
  if (dim_ == 0) throw InputError("polytope dimension must be positive");
  for (const auto& f : facets_) {
    if (f.normal.size() != dim_) throw InputError("facet normal has wrong dimension");
    if (is_zero(f.normal)) throw InputError("facet with zero normal");
  }
  if (chart_) {
    if (chart_->size() != dim_ + 1) throw InputError("chart matrix has wrong size");
    for (const auto& row : *chart_) {
      if (row.size() != dim_ + 1) throw InputError("chart matrix has wrong size");
    }
    chart_inverse_ = inverse(*chart_);
    if (!chart_inverse_) throw InputError("chart matrix is singular");
  }
  if (!validate) return;
  if (facets_.size() < dim_ + 1) throw PreconditionError("too few facets for a bounded polytope");

  for (std::size_t i = 0; i < facets_.size(); ++i) {
    for (std::size_t j = i + 1; j < facets_.size(); ++j) {
      QVector a = chart_form(i), b = chart_form(j);
      if (parallel(a, b)) {
        // Same hyperplane; equal orientation means a duplicate inequality.
        std::size_t k = 0;
        while (a[k].is_zero()) ++k;
        if ((a[k] / b[k]).sign() > 0) {
          throw PreconditionError("facets " + std::to_string(i) + " and " + std::to_string(j) +
                                  " define the same inequality");
        }
      }
    }
  }
  check_bounded(*this);
  auto [vrep, inc] = enumerate_vertices(*this);
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    QMatrix pts;
    for (std::size_t v = 0; v < vrep.vertices.size(); ++v) {
      const auto& fv = inc.facets_of_vertex[v];
      if (!std::binary_search(fv.begin(), fv.end(), f)) continue;
      QVector h{Rational(1)};
      h.insert(h.end(), vrep.vertices[v].begin(), vrep.vertices[v].end());
      pts.push_back(std::move(h));
    }
    if (rank(pts) != dim_) {
      throw PreconditionError("facet " + std::to_string(f) + " is redundant (does not support a facet)");
    }
  }
  QPoint c = interior_point(*this);
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if ((dot(facets_[f].normal, c) + facets_[f].offset).sign() <= 0) {
      throw PreconditionError("polytope is not full-dimensional");
    }
  }
}

HPolytope HPolytope::from_homogeneous(const std::vector<QVector>& forms, const QMatrix& chart,
                                      std::string name) {
  const std::size_t n = chart.size() - 1;
  auto tinv = inverse(chart);
  if (!tinv) throw InputError("chart matrix is singular");
  QMatrix tinv_t = transpose(*tinv);
  std::vector<Facet> facets;
  for (const auto& f : forms) {
    if (f.size() != n + 1) throw InputError("homogeneous facet form has wrong length");
    QVector a = mat_vec(tinv_t, f);
    facets.push_back(Facet{QVector(a.begin() + 1, a.end()), a[0]});
  }
  return HPolytope(n, std::move(facets), std::move(name), chart);
}

QMatrix HPolytope::chart() const {
  if (chart_) return *chart_;
  QMatrix id(dim_ + 1, QVector(dim_ + 1, Rational(0)));
  for (std::size_t i = 0; i <= dim_; ++i) id[i][i] = Rational(1);
  return id;
}

QVector HPolytope::chart_form(std::size_t i) const {
  const Facet& f = facets_.at(i);
  QVector a{f.offset};
  a.insert(a.end(), f.normal.begin(), f.normal.end());
  return a;
}

QVector HPolytope::ambient_form(std::size_t i) const {
  QVector a = chart_form(i);
  if (!chart_) return a;
  return mat_vec(transpose(*chart_), a);
}

Poly HPolytope::affine_form(std::size_t i) const {
  QVector c = chart_form(i);
  Rational offset = c[0];
  c[0] = Rational(0);
  return Poly::linear(registry(), c) + Poly::constant(registry(), offset);
}

QVector HPolytope::to_ambient(const QVector& chart_point) const {
  if (!chart_inverse_) return chart_point;
  return mat_vec(*chart_inverse_, chart_point);
}

bool IncidenceData::is_simple(std::size_t dim) const {
  return std::all_of(facets_of_vertex.begin(), facets_of_vertex.end(),
                     [dim](const auto& f) { return f.size() == dim; });
}

// ---------------------------------------------------------------- vertices

namespace {

std::optional<QPoint> solve_vertex(const HPolytope& p, const std::vector<std::size_t>& subset) {
  const std::size_t n = p.dim();
  QMatrix a;
  QVector b;
  for (auto i : subset) {
    a.push_back(p.facet(i).normal);
    b.push_back(-p.facet(i).offset);
  }
  if (rank(a) < n) return std::nullopt;
  auto y = solve(a, b);
  if (!y) return std::nullopt;
  for (const auto& f : p.facets()) {
    if ((dot(f.normal, *y) + f.offset).sign() < 0) return std::nullopt;
  }
  return y;
}

std::pair<VRep, IncidenceData> collect_vertices(const HPolytope& p,
                                                const std::vector<std::optional<QPoint>>& candidates) {
  VRep vrep;
  IncidenceData inc;
  std::map<QPoint, std::size_t> seen;
  for (const auto& c : candidates) {
    if (!c || seen.count(*c)) continue;
    seen.emplace(*c, vrep.vertices.size());
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
      if ((dot(p.facet(i).normal, *c) + p.facet(i).offset).is_zero()) tight.push_back(i);
    }
    vrep.vertices.push_back(*c);
    inc.facets_of_vertex.push_back(std::move(tight));
  }
  if (vrep.vertices.empty()) throw PreconditionError("polytope is empty (no feasible vertex)");
  return {std::move(vrep), std::move(inc)};
}

}  // namespace

std::pair<VRep, IncidenceData> enumerate_vertices_serial(const HPolytope& p) {
  auto subsets = subsets_of_size(p.num_facets(), p.dim());
  std::vector<std::optional<QPoint>> candidates(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) candidates[s] = solve_vertex(p, subsets[s]);
  return collect_vertices(p, candidates);
}

std::pair<VRep, IncidenceData> enumerate_vertices_parallel(const HPolytope& p) {
  auto subsets = subsets_of_size(p.num_facets(), p.dim());
  std::vector<std::optional<QPoint>> candidates(subsets.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t s = 0; s < subsets.size(); ++s) candidates[s] = solve_vertex(p, subsets[s]);
  return collect_vertices(p, candidates);
}

std::pair<VRep, IncidenceData> enumerate_vertices(const HPolytope& p) {
  check_bounded(p);
  if (omp_get_max_threads() > 1) return enumerate_vertices_parallel(p);
  return enumerate_vertices_serial(p);
}

void check_bounded(const HPolytope& p) {
  const std::size_t n = p.dim();
  QMatrix normals;
  for (const auto& f : p.facets()) normals.push_back(f.normal);
  if (rank(normals) < n) throw PreconditionError("polytope is unbounded (facet normals do not span)");
  for (const auto& subset : subsets_of_size(p.num_facets(), n - 1)) {
    QMatrix a;
    for (auto i : subset) a.push_back(normals[i]);
    auto ns = nullspace(a, n);
    if (ns.size() != 1) continue;
    for (int s : {1, -1}) {
      bool ray = true;
      for (const auto& u : normals) {
        if ((dot(u, ns[0]) * Rational(s)).sign() < 0) {
          ray = false;
          break;
        }
      }
      if (ray) throw PreconditionError("polytope is unbounded (recession direction found)");
    }
  }
}

SimplicityCheck is_simple_arrangement(const HPolytope& p) {
  const std::size_t k = p.num_facets();
  std::vector<QVector> forms;
  for (std::size_t i = 0; i < k; ++i) forms.push_back(p.ambient_form(i));
  for (std::size_t s = 1; s <= std::min(k, p.dim() + 1); ++s) {
    for (const auto& subset : subsets_of_size(k, s)) {
      QMatrix m;
      for (auto i : subset) m.push_back(forms[i]);
      if (rank(m) < s) return {false, subset};
    }
  }
  return {};
}

// ---------------------------------------------------------------- residual flats

std::vector<const Flat*> ResidualArrangement::of_codim(std::size_t c) const {
  std::vector<const Flat*> out;
  for (const auto& f : flats) {
    if (f.codim == c) out.push_back(&f);
  }
  return out;
}

std::size_t ResidualArrangement::count(std::size_t codim) const { return of_codim(codim).size(); }

ResidualArrangement residual_arrangement(const HPolytope& p, const IncidenceData& inc) {
  auto simple = is_simple_arrangement(p);
  if (!simple.simple) {
    std::string w;
    for (auto i : simple.witness) w += (w.empty() ? "" : ",") + std::to_string(i);
    throw PreconditionError("facet hyperplane arrangement is not simple (dependent facets {" + w + "})");
  }
  ResidualArrangement out;
  out.dim = p.dim();
  for (std::size_t s = 2; s <= p.dim(); ++s) {
    for (const auto& subset : subsets_of_size(p.num_facets(), s)) {
      bool face = std::any_of(inc.facets_of_vertex.begin(), inc.facets_of_vertex.end(), [&](const auto& fv) {
        return std::includes(fv.begin(), fv.end(), subset.begin(), subset.end());
      });
      if (face) continue;
      QMatrix forms;
      for (auto i : subset) forms.push_back(p.ambient_form(i));
      out.flats.push_back(Flat{subset, s, nullspace(forms, p.dim() + 1)});
    }
  }
  return out;
}

QPoint interior_point(const HPolytope& p) {
  auto [vrep, inc] = enumerate_vertices(p);
  QPoint c(p.dim(), Rational(0));
  for (const auto& v : vrep.vertices) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += v[i];
  }
  Rational inv = Rational(static_cast<long>(vrep.vertices.size())).inverse();
  for (auto& x : c) x *= inv;
  return c;
}

std::size_t edge_count(const HPolytope& p, const VRep& v, const IncidenceData& inc) {
  std::size_t edges = 0;
  const auto& fv = inc.facets_of_vertex;
  for (std::size_t a = 0; a < v.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < v.vertices.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(fv[a].begin(), fv[a].end(), fv[b].begin(), fv[b].end(), std::back_inserter(common));
      if (common.size() + 1 < p.dim()) continue;
      QMatrix forms;
      for (auto i : common) forms.push_back(p.ambient_form(i));
      if (rank(forms) != p.dim() - 1) continue;
      bool third = false;
      for (std::size_t c = 0; c < v.vertices.size() && !third; ++c) {
        if (c == a || c == b) continue;
        third = std::includes(fv[c].begin(), fv[c].end(), common.begin(), common.end());
      }
      if (!third) ++edges;
    }
  }
  return edges;
}

// ---------------------------------------------------------------- polygons

Rational orient2d(const QPoint& a, const QPoint& b, const QPoint& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

namespace {

void check_convex_ccw(const std::vector<QPoint>& v) {
  const std::size_t n = v.size();
  if (n < 3) throw PreconditionError("polygon needs at least three vertices");
  for (const auto& p : v) {
    if (p.size() != 2) throw InputError("polygon vertex must have two coordinates");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const QPoint& a = v[i];
    const QPoint& b = v[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (orient2d(a, b, v[j]).sign() <= 0) {
        throw PreconditionError("vertices are not in strictly convex counterclockwise position");
      }
    }
  }
}

Facet edge_through(const QPoint& a, const QPoint& b) {
  // Positive on the left of a -> b.
  QVector w{a[1] - b[1], b[0] - a[0]};
  Rational c = -(w[0] * a[0] + w[1] * a[1]);
  return Facet{w, c};
}

}  // namespace

Polygon Polygon::from_vertices(std::vector<QPoint> vertices) {
  check_convex_ccw(vertices);
  Polygon p;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) p.edges_.push_back(edge_through(vertices[(i + n - 1) % n], vertices[i]));
  p.vertices_ = std::move(vertices);
  return p;
}

Polygon Polygon::from_polytope(const HPolytope& hp) {
  if (hp.dim() != 2) throw PreconditionError("not a polygon");
  const std::size_t n = hp.num_facets();
  Polygon p;
  for (std::size_t i = 0; i < n; ++i) {
    const Facet& a = hp.facet(i);
    const Facet& b = hp.facet((i + 1) % n);
    auto y = solve(QMatrix{a.normal, b.normal}, QVector{-a.offset, -b.offset});
    if (!y || rank(QMatrix{a.normal, b.normal}) < 2) {
      throw PreconditionError("consecutive facets are parallel; facets are not in cyclic order");
    }
    for (const auto& f : hp.facets()) {
      if ((dot(f.normal, *y) + f.offset).sign() < 0) {
        throw PreconditionError("facets are not listed in cyclic order (L_i and L_i+1 meet outside)");
      }
    }
    p.vertices_.push_back(*y);
  }
  check_convex_ccw(p.vertices_);
  p.edges_ = hp.facets();
  return p;
}

Poly Polygon::edge_form(std::size_t i) const {
  const Facet& f = edge(i);
  return Poly::linear(registry(), QVector{f.offset, f.normal[0], f.normal[1]});
}

HPolytope Polygon::to_hpolytope(std::string name) const { return HPolytope(2, edges_, std::move(name)); }

Polygon Polygon::sub_polygon(std::vector<std::size_t> indices) const {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  std::vector<QPoint> pts;
  for (auto i : indices) pts.push_back(vertices_.at(i));
  return from_vertices(std::move(pts));
}

std::vector<QPoint> polygon_ccw(const HPolytope& p) {
  if (p.dim() != 2) throw PreconditionError("not a polygon");
  auto [vrep, inc] = enumerate_vertices(p);
  QPoint c = interior_point(p);
  auto half = [&](const QPoint& v) {
    Rational dx = v[0] - c[0], dy = v[1] - c[1];
    return dy.sign() > 0 || (dy.is_zero() && dx.sign() > 0) ? 0 : 1;
  };
  auto pts = vrep.vertices;
  std::sort(pts.begin(), pts.end(), [&](const QPoint& a, const QPoint& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return orient2d(c, a, b).sign() > 0;
  });
  auto start = std::min_element(pts.begin(), pts.end());
  std::rotate(pts.begin(), start, pts.end());
  return pts;
}

}  // namespace adjrep
