#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjrep/linalg.hpp"
#include "adjrep/poly.hpp"

namespace adjrep {

using QPoint = QVector;

/// <normal, y> + offset >= 0
struct Facet {
  QVector normal;
  Rational offset;
};

/// Registry x0..xn shared by everything living in P^n.
RegistryPtr projective_registry(std::size_t n);

/// Full-dimensional bounded polytope given by facet inequalities in an affine
/// chart. For projective input the chart matrix T maps ambient homogeneous
/// coordinates x to chart coordinates y = T x with y0 = 1 on the chart.
class HPolytope {
 public:
  /// Validates boundedness, non-emptiness and minimality unless `validate` is false.
  HPolytope(std::size_t dim, std::vector<Facet> facets, std::string name = {},
            std::optional<QMatrix> chart = std::nullopt, bool validate = true);

  /// Homogeneous forms in ambient coordinates plus a chart matrix whose first
  /// row is the chart form. Each form is rewritten in chart coordinates.
  static HPolytope from_homogeneous(const std::vector<QVector>& forms, const QMatrix& chart,
                                    std::string name = {});

  std::size_t dim() const { return dim_; }
  std::size_t num_facets() const { return facets_.size(); }
  const Facet& facet(std::size_t i) const { return facets_.at(i); }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::string& name() const { return name_; }
  bool has_chart() const { return chart_.has_value(); }
  /// Identity when no chart was given.
  QMatrix chart() const;

  /// (offset, normal) in chart coordinates.
  QVector chart_form(std::size_t i) const;
  /// Coefficients of the facet form in ambient homogeneous coordinates.
  QVector ambient_form(std::size_t i) const;
  /// offset + <normal, (x1..xn)> over projective_registry(dim).
  Poly affine_form(std::size_t i) const;
  /// Maps a homogeneous chart point to ambient coordinates.
  QVector to_ambient(const QVector& chart_point) const;
  RegistryPtr registry() const { return projective_registry(dim_); }

 private:
  std::size_t dim_;
  std::vector<Facet> facets_;
  std::string name_;
  std::optional<QMatrix> chart_;
  std::optional<QMatrix> chart_inverse_;
};

struct VRep {
  std::vector<QPoint> vertices;
};

struct IncidenceData {
  /// Sorted facet indices met with equality, one list per vertex.
  std::vector<std::vector<std::size_t>> facets_of_vertex;
  bool is_simple(std::size_t dim) const;
};

/// Brute force over n-subsets of facets; output order is by subset index.
std::pair<VRep, IncidenceData> enumerate_vertices(const HPolytope& p);
std::pair<VRep, IncidenceData> enumerate_vertices_serial(const HPolytope& p);
std::pair<VRep, IncidenceData> enumerate_vertices_parallel(const HPolytope& p);

/// Throws PreconditionError when the recession cone is non-trivial.
void check_bounded(const HPolytope& p);

struct SimplicityCheck {
  bool simple = true;
  std::vector<std::size_t> witness;  // a dependent facet subset when not simple
};

/// Every i <= n+1 facet forms independent in homogeneous coordinates.
SimplicityCheck is_simple_arrangement(const HPolytope& p);

struct Flat {
  std::vector<std::size_t> facets;
  std::size_t codim = 0;
  QMatrix basis;  // spanning vectors in ambient homogeneous coordinates
};

struct ResidualArrangement {
  std::size_t dim = 0;
  std::vector<Flat> flats;  // by codimension, then by facet subset
  std::vector<const Flat*> of_codim(std::size_t c) const;
  std::size_t count(std::size_t codim) const;
  /// Flats of codimension dim-1.
  std::vector<const Flat*> lines() const { return of_codim(dim - 1); }
};

ResidualArrangement residual_arrangement(const HPolytope& p, const IncidenceData& inc);

/// Vertex centroid.
QPoint interior_point(const HPolytope& p);

/// Number of edges (1-dimensional faces) from incidence data.
std::size_t edge_count(const HPolytope& p, const VRep& v, const IncidenceData& inc);

/// Convex polygon with vertices v_0..v_{n-1} counterclockwise and edge i
/// joining v_{i-1} and v_i, so v_i lies on edges i and i+1.
class Polygon {
 public:
  /// Vertices must be in strictly convex counterclockwise position.
  static Polygon from_vertices(std::vector<QPoint> vertices);
  /// Facets must be listed in cyclic counterclockwise order; keeps their forms.
  static Polygon from_polytope(const HPolytope& p);

  std::size_t size() const { return vertices_.size(); }
  const QPoint& vertex(std::size_t i) const { return vertices_.at(i % size()); }
  const std::vector<QPoint>& vertices() const { return vertices_; }
  const Facet& edge(std::size_t i) const { return edges_.at(i % size()); }
  Poly edge_form(std::size_t i) const;
  HPolytope to_hpolytope(std::string name = {}) const;
  /// conv of the listed vertex indices (kept in counterclockwise order).
  Polygon sub_polygon(std::vector<std::size_t> indices) const;
  RegistryPtr registry() const { return projective_registry(2); }

 private:
  std::vector<QPoint> vertices_;
  std::vector<Facet> edges_;
};

/// Vertices counterclockwise starting from the lexicographically smallest.
std::vector<QPoint> polygon_ccw(const HPolytope& p);

/// Twice the signed area of triangle abc.
Rational orient2d(const QPoint& a, const QPoint& b, const QPoint& c);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace adjrep
