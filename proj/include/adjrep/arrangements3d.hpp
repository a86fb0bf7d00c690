#pragma once

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "adjrep/linalg.hpp"
#include "adjrep/poly_matrix.hpp"
#include "adjrep/polytope.hpp"

namespace adjrep {

/// Line in P^3 spanned by two homogeneous points.
struct Line3 {
  QVector p;
  QVector q;
  std::optional<std::pair<std::size_t, std::size_t>> facets;

  Line3(QVector a, QVector b, std::optional<std::pair<std::size_t, std::size_t>> f = std::nullopt);
  /// V(a, b) for two independent plane forms.
  static Line3 from_planes(const QVector& a, const QVector& b,
                           std::optional<std::pair<std::size_t, std::size_t>> f = std::nullopt);

  bool contains(const QVector& point) const;
  bool in_plane(const QVector& plane) const;
  bool same_as(const Line3& o) const;
};

using LineArrangement = std::vector<Line3>;

bool lines_meet(const Line3& a, const Line3& b);
/// Common point of two distinct meeting lines.
std::optional<QVector> intersection_point(const Line3& a, const Line3& b);
/// Rejects duplicate lines with InputError.
void check_arrangement(const LineArrangement& c);
/// First triple (lexicographic) of lines through one point.
std::optional<std::array<std::size_t, 3>> three_concurrent(const LineArrangement& c);

/// One level of a nice decomposition. `lines` index into the arrangement the
/// certificate was built for; `z` are the disjoint lines, `plane` the witness H.
struct NiceNode {
  std::size_t degree = 1;
  std::vector<std::size_t> lines;
  std::vector<std::size_t> z;
  std::vector<std::size_t> y;
  std::vector<std::size_t> in_plane;
  QVector plane;
  std::shared_ptr<const NiceNode> y_certificate;
  std::shared_ptr<const NiceNode> rest_certificate;  // lines off the plane
};

struct NiceCertificate {
  std::size_t degree = 1;
  std::shared_ptr<const NiceNode> root;
};

/// Depth-first search with memoization on line subsets.
std::optional<NiceCertificate> is_nice(const LineArrangement& c, std::size_t degree);

/// Re-checks every condition recorded in a certificate.
bool validate_nice_certificate(const LineArrangement& c, const NiceCertificate& cert);

struct NiceSubarrangement {
  std::vector<std::size_t> subset;
  NiceCertificate certificate;
};

/// First binom(D,2)-subset (lexicographic) that is nice for degree D.
std::optional<NiceSubarrangement> find_nice_subarrangement(const LineArrangement& lines, std::size_t degree);

/// Dimension of the space of degree-m forms on P^3 vanishing on every line.
std::size_t h0_vanishing_dimension(const LineArrangement& c, int m);

/// Intersections of two facet planes containing no vertex, tagged with the
/// facet pair. Works for non-simple polytopes as well.
LineArrangement residual_lines(const HPolytope& p);

struct SingularityWitness {
  QVector point;
  std::array<std::size_t, 3> lines{};  // indices into residual_lines(p)
  std::vector<std::size_t> facets;     // facets whose planes meet at the point
};

/// Three residual lines through one point; the adjoint's gradient is checked
/// to vanish there (CertificateError otherwise).
std::optional<SingularityWitness> concurrency_singularity_certificate(const HPolytope& p, const Poly& alpha);

/// [[l1, l2], [-q2, q1]] with l1*q1 + l2*q2 = f, for a quadric vanishing on V(l1, l2).
PolyMatrix detrep_from_codim2_subspace(const Poly& f, const Poly& l1, const Poly& l2);

}  // namespace adjrep
