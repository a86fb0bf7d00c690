#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adjrep/poly_matrix.hpp"
#include "adjrep/polytope.hpp"

namespace adjrep {

/// Symmetric tridiagonal representation of a polygon adjoint. Entry (i,i) is
/// a multiple of alpha_{Q_i} with Q_i = conv(v_1, v_{i+1}, v_{i+2}, v_{i+3}),
/// entry (i,i+1) is l_{i+3} (vertex and edge labels 1-based).
struct TridiagonalRep {
  PolyMatrix matrix;
  /// (lambda, mu) with lambda a_Q a_{k-1} - mu l_{k-1}^2 a_{k-2} = a_k, for k = 5..n.
  std::vector<std::pair<Rational, Rational>> scalars;
  std::vector<Poly> subquad_adjoints;
  /// c with det(M) = c * alpha_P.
  Rational det_scalar;
  /// c_k with k-th leading minor = c_k * alpha of conv(v_1..v_{k+3}).
  std::vector<Rational> minor_scalars;
  /// True when the whole matrix was negated to make entry (1,1) positive at the centroid.
  bool negated = false;
};

/// Recursive assembly over the leading subpolygons; every certificate is
/// re-checked and a CertificateError is raised if one fails.
TridiagonalRep build_tridiagonal(const Polygon& p);

/// c with det(m) = c*f, or empty. Requires linear entries and size = deg f.
std::optional<Rational> verify_detrep(const PolyMatrix& m, const Poly& f);

/// All leading principal minors of +-m(point) positive, the sign chosen so the
/// (1,1) entry is positive. `point` is homogeneous or affine (x0 = 1 implied).
bool definiteness_certificate(const PolyMatrix& m, const QVector& point);

/// Homogeneous intersection point of edge lines i and j (0-based).
QVector edge_intersection(const Polygon& p, std::size_t i, std::size_t j);

/// Checks that the line of the quadrilateral v_{i-1} v_i v_{j-1} v_j is the
/// tangent to the adjoint at L_i ∩ L_j (0-based, non-adjacent edges).
/// Throws PreconditionError if the adjoint is singular there.
bool tangency_certificate(const Polygon& p, std::size_t i, std::size_t j);
bool tangency_certificate(const Polygon& p, const Poly& alpha, std::size_t i, std::size_t j);

/// True if the adjoint has non-vanishing gradient at every residual point.
bool adjoint_smooth_at_residual_points(const Polygon& p);

struct ContactReport {
  std::size_t expected = 0;  // (n-3)(n-4)/2
  std::size_t checked = 0;
  std::size_t tangent = 0;
  std::vector<QVector> points;
  bool ok() const { return checked == expected && tangent == expected; }
};

/// Contact of alpha_P with alpha_{P'}, P' = conv(v_1..v_{n-1}), at the residual
/// points of P off L_1 and L_n.
ContactReport contact_certificate(const Polygon& p);

}  // namespace adjrep
