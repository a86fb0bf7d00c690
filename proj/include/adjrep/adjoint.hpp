#pragma once

#include <array>
#include <vector>

#include "adjrep/poly.hpp"
#include "adjrep/polytope.hpp"

namespace adjrep {

/// Registry r0..r{k-1}, one variable per facet.
RegistryPtr facet_registry(std::size_t k);

struct UniversalAdjoint {
  Poly poly;  // over facet_registry(k); variable i belongs to facet i
};

struct AdjointResult {
  Poly affine;       // chart coordinates, x0 absent
  Poly homogeneous;  // ambient coordinates x0..xn
  int degree = 0;
};

/// Sum over vertices of |det U_v| times the product of the facet variables
/// not incident to v. Rejects non-simple vertices.
UniversalAdjoint universal_adjoint(const HPolytope& p, const IncidenceData& inc);

/// Specializes the universal adjoint to the facet forms, checks the degree
/// drop to at most k-n-1, homogenizes with x0 and normalizes canonically. `affine` is
/// the dehomogenization of the chart version; with a chart, `homogeneous` is
/// mapped back to ambient coordinates.
AdjointResult adjoint(const HPolytope& p);

/// sum_i det(w_i, w_{i+1}) prod_{j != i, i+1} l_j with the polygon's own edge
/// forms, homogenized with x0. Not rescaled.
AdjointResult polygon_adjoint(const Polygon& p);

using Triangle = std::array<std::size_t, 3>;
using Triangulation2D = std::vector<Triangle>;

Triangulation2D fan_triangulation(std::size_t n, std::size_t apex = 0);
/// Clips ears at varying positions; differs from every fan once n >= 6.
Triangulation2D ear_clipping_triangulation(std::size_t n);
/// Throws PreconditionError unless t triangulates the convex polygon q.
void check_triangulation(const Polygon& q, const Triangulation2D& t);

/// Warren's adjoint of q: sum over triangles of area times the product of
/// (t0 - <v, t>) over the vertices v not in the triangle. Variables x0, x1, x2
/// play the role of t0, t1, t2.
Poly warren_adjoint_2d(const Polygon& q, const Triangulation2D& t);

/// Polar dual of a polygon that contains the origin in its interior.
Polygon polar_dual(const Polygon& p);

/// alpha_P computed as Warren's adjoint of the polar dual in the chart centered
/// at the vertex centroid, mapped back to the original coordinates.
Poly polar_warren_adjoint(const Polygon& p, bool use_ear_clipping = false);

/// Exact test: f restricted to the span of the flat's basis is the zero polynomial.
bool vanishes_on_flat(const Poly& f, const Flat& fl);
bool vanishes_on_span(const Poly& f, const QMatrix& basis);

}  // namespace adjrep
