#include "adjrep/detrep2d.hpp"

#include <set>

#include "adjrep/adjoint.hpp"
#include "adjrep/error.hpp"

namespace adjrep {

namespace {

Poly adjoint_of_prefix(const Polygon& p, std::size_t k) {
  if (k == p.size()) return polygon_adjoint(p).homogeneous;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return polygon_adjoint(p.sub_polygon(idx)).homogeneous;
}

// Solves lambda*a - mu*b = c by matching coefficients.
std::pair<Rational, Rational> solve_pencil(const Poly& a, const Poly& b, const Poly& c) {
  std::set<Exponents, GrlexGreater> monos;
  for (const Poly* f : {&a, &b, &c}) {
    for (const auto& [e, v] : f->terms()) monos.insert(e);
  }
  QMatrix rows;
  QVector rhs;
  for (const auto& e : monos) {
    rows.push_back(QVector{a.coefficient(e), -b.coefficient(e)});
    rhs.push_back(c.coefficient(e));
  }
  if (rank(rows) < 2) throw PreconditionError("degenerate polygon: scalar system for (lambda, mu) is singular");
  auto sol = solve(rows, rhs);
  if (!sol) throw PreconditionError("degenerate polygon: no (lambda, mu) satisfies the recursion identity");
  if ((*sol)[0].is_zero() || (*sol)[1].is_zero()) {
    throw PreconditionError("degenerate polygon: recursion scalar vanishes");
  }
  return {(*sol)[0], (*sol)[1]};
}

QVector homogeneous_point(const PolyMatrix& m, const QVector& point) {
  const std::size_t nv = m.registry()->size();
  if (point.size() == nv) return point;
  if (point.size() + 1 == nv) {
    QVector h{Rational(1)};
    h.insert(h.end(), point.begin(), point.end());
    return h;
  }
  throw InputError("evaluation point has wrong dimension");
}

}  // namespace

TridiagonalRep build_tridiagonal(const Polygon& p) {
  const std::size_t n = p.size();
  if (n < 4) throw PreconditionError("tridiagonal representation needs at least four vertices");
  auto reg = p.registry();

  std::vector<Poly> alpha(n + 1, Poly(reg));  // alpha[k] for conv(v_1..v_k)
  alpha[3] = Poly::constant(reg, Rational(1));
  for (std::size_t k = 4; k <= n; ++k) alpha[k] = adjoint_of_prefix(p, k);

  std::vector<Poly> quads;
  for (std::size_t i = 1; i + 3 <= n; ++i) {
    quads.push_back(polygon_adjoint(p.sub_polygon({0, i, i + 1, i + 2})).homogeneous);
  }

  std::vector<Rational> gamma(n + 1, Rational(1));
  auto g4 = equal_up_to_scalar(quads[0], alpha[4]);
  if (!g4) throw CertificateError("base quadrilateral adjoint mismatch");
  gamma[4] = *g4;

  PolyMatrix m(reg, n - 3);
  m.set(0, 0, quads[0]);
  std::vector<std::pair<Rational, Rational>> scalars;
  for (std::size_t k = 5; k <= n; ++k) {
    const Poly& aq = quads[k - 4];
    Poly l = p.edge_form(k - 2);  // l_{k-1}
    auto [lambda, mu] = solve_pencil(aq * alpha[k - 1], l * l * alpha[k - 2], alpha[k]);
    scalars.emplace_back(lambda, mu);
    const std::size_t i = k - 4;
    m.set(i, i, aq * (lambda * gamma[k - 2] / (mu * gamma[k - 1])));
    m.set(i - 1, i, l);
    m.set(i, i - 1, l);
    gamma[k] = gamma[k - 2] / mu;
  }

  TridiagonalRep rep{m, scalars, quads, Rational(0), {}, false};
  QPoint c = interior_point(p.to_hpolytope());
  if (m(0, 0).evaluate(QVector{Rational(1), c[0], c[1]}).sign() < 0) {
    rep.matrix = -m;
    rep.negated = true;
  }

  for (std::size_t k = 1; k <= n - 3; ++k) {
    auto ck = equal_up_to_scalar(det(rep.matrix.leading(k)), alpha[k + 3]);
    if (!ck) throw CertificateError("leading minor " + std::to_string(k) + " is not a subpolygon adjoint");
    rep.minor_scalars.push_back(*ck);
  }
  rep.det_scalar = rep.minor_scalars.back();
  if (!rep.matrix.is_symmetric() || !rep.matrix.is_tridiagonal()) {
    throw CertificateError("assembled matrix is not symmetric tridiagonal");
  }
  return rep;
}

std::optional<Rational> verify_detrep(const PolyMatrix& m, const Poly& f) {
  if (!m.has_linear_entries()) throw PreconditionError("matrix entries must have degree at most one");
  if (f.degree() != static_cast<int>(m.size())) {
    throw PreconditionError("matrix size " + std::to_string(m.size()) + " does not match degree " +
                            std::to_string(f.degree()));
  }
  return equal_up_to_scalar(det(m), f);
}

bool definiteness_certificate(const PolyMatrix& m, const QVector& point) {
  if (!m.is_symmetric()) throw PreconditionError("definiteness needs a symmetric matrix");
  if (!m.has_linear_entries()) throw PreconditionError("matrix entries must have degree at most one");
  QMatrix a = m.evaluate(homogeneous_point(m, point));
  if (a[0][0].sign() < 0) {
    for (auto& row : a) {
      for (auto& x : row) x = -x;
    }
  }
  for (std::size_t k = 1; k <= a.size(); ++k) {
    QMatrix lead(k, QVector(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
    }
    if (determinant(lead).sign() <= 0) return false;
  }
  return true;
}

QVector edge_intersection(const Polygon& p, std::size_t i, std::size_t j) {
  const Facet& a = p.edge(i);
  const Facet& b = p.edge(j);
  QVector ha{a.offset, a.normal[0], a.normal[1]};
  QVector hb{b.offset, b.normal[0], b.normal[1]};
  auto ns = nullspace(QMatrix{ha, hb}, 3);
  if (ns.size() != 1) throw PreconditionError("edge lines coincide");
  return ns[0];
}

bool tangency_certificate(const Polygon& p, const Poly& alpha, std::size_t i, std::size_t j) {
  const std::size_t n = p.size();
  i %= n;
  j %= n;
  if (i == j || (i + 1) % n == j || (j + 1) % n == i) {
    throw PreconditionError("tangency needs non-adjacent edges");
  }
  QVector q = edge_intersection(p, i, j);
  auto g = gradient_at(alpha, q);
  if (is_zero(g)) throw PreconditionError("adjoint is singular at the residual point");
  Poly aq = polygon_adjoint(p.sub_polygon({(i + n - 1) % n, i, (j + n - 1) % n, j})).homogeneous;
  if (!alpha.evaluate(q).is_zero() || !aq.evaluate(q).is_zero()) return false;
  return parallel(g, aq.linear_coefficients());
}

bool tangency_certificate(const Polygon& p, std::size_t i, std::size_t j) {
  return tangency_certificate(p, polygon_adjoint(p).homogeneous, i, j);
}

bool adjoint_smooth_at_residual_points(const Polygon& p) {
  Poly alpha = polygon_adjoint(p).homogeneous;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (is_zero(gradient_at(alpha, edge_intersection(p, i, j)))) return false;
    }
  }
  return true;
}

ContactReport contact_certificate(const Polygon& p) {
  const std::size_t n = p.size();
  if (n < 5) throw PreconditionError("contact certificate needs at least five vertices");
  std::vector<std::size_t> idx(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) idx[i] = i;
  Poly a = polygon_adjoint(p).homogeneous;
  Poly a_prime = polygon_adjoint(p.sub_polygon(idx)).homogeneous;

  ContactReport rep;
  rep.expected = (n - 3) * (n - 4) / 2;
  // Edge labels 2..n-1 are 0-based 1..n-2.
  for (std::size_t i = 1; i <= n - 2; ++i) {
    for (std::size_t j = i + 2; j <= n - 2; ++j) {
      QVector q = edge_intersection(p, i, j);
      ++rep.checked;
      rep.points.push_back(q);
      if (!a.evaluate(q).is_zero() || !a_prime.evaluate(q).is_zero()) continue;
      auto g1 = gradient_at(a, q);
      auto g2 = gradient_at(a_prime, q);
      if (!is_zero(g1) && !is_zero(g2) && parallel(g1, g2)) ++rep.tangent;
    }
  }
  return rep;
}

}  // namespace adjrep
