#include "adjrep/arrangements3d.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "adjrep/adjoint.hpp"
#include "adjrep/error.hpp"

namespace adjrep {

// ---------------------------------------------------------------- lines

Line3::Line3(QVector a, QVector b, std::optional<std::pair<std::size_t, std::size_t>> f)
    : p(std::move(a)), q(std::move(b)), facets(f) {
  if (p.size() != 4 || q.size() != 4) throw InputError("line points need four homogeneous coordinates");
  if (rank(QMatrix{p, q}) != 2) throw InputError("line points are not independent");
}

Line3 Line3::from_planes(const QVector& a, const QVector& b,
                         std::optional<std::pair<std::size_t, std::size_t>> f) {
  auto ns = nullspace(QMatrix{a, b}, 4);
  if (ns.size() != 2) throw InputError("planes do not meet in a line");
  return Line3(ns[0], ns[1], f);
}

bool Line3::contains(const QVector& point) const { return rank(QMatrix{p, q, point}) == 2; }

bool Line3::in_plane(const QVector& plane) const { return dot(plane, p).is_zero() && dot(plane, q).is_zero(); }

bool Line3::same_as(const Line3& o) const { return contains(o.p) && contains(o.q); }

bool lines_meet(const Line3& a, const Line3& b) { return rank(QMatrix{a.p, a.q, b.p, b.q}) <= 3; }

std::optional<QVector> intersection_point(const Line3& a, const Line3& b) {
  if (a.same_as(b) || !lines_meet(a, b)) return std::nullopt;
  // s*a.p + t*a.q = u*b.p + w*b.q
  QMatrix m(4, QVector(4));
  for (std::size_t i = 0; i < 4; ++i) m[i] = {a.p[i], a.q[i], -b.p[i], -b.q[i]};
  auto ns = nullspace(m, 4);
  if (ns.size() != 1) return std::nullopt;
  QVector pt(4);
  for (std::size_t i = 0; i < 4; ++i) pt[i] = ns[0][0] * a.p[i] + ns[0][1] * a.q[i];
  return pt;
}

void check_arrangement(const LineArrangement& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i].same_as(c[j])) {
        throw InputError("duplicate lines " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

std::optional<std::array<std::size_t, 3>> three_concurrent(const LineArrangement& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      auto pt = intersection_point(c[i], c[j]);
      if (!pt) continue;
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        if (c[k].contains(*pt)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- nice arrangements

namespace {

using Mask = std::uint64_t;

std::size_t binom2(std::size_t d) { return d * (d - 1) / 2; }

std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return out;
}

QVector plane_through(const Line3& a, const Line3& b) {
  auto ns = nullspace(QMatrix{a.p, a.q, b.p, b.q}, 4);
  return ns.at(0);
}

class NiceSearch {
 public:
  explicit NiceSearch(const LineArrangement& c) : c_(c) {
    const std::size_t n = c.size();
    meet_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) meet_[i][j] = meet_[j][i] = lines_meet(c[i], c[j]);
    }
  }

  std::shared_ptr<const NiceNode> search(Mask mask, std::size_t degree) {
    auto key = std::make_pair(mask, degree);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto res = compute(mask, degree);
    memo_.emplace(key, res);
    return res;
  }

 private:
  std::shared_ptr<const NiceNode> compute(Mask mask, std::size_t degree) {
    const auto idx = mask_indices(mask);
    if (degree == 0 || idx.size() != binom2(degree)) return nullptr;
    auto node = std::make_shared<NiceNode>();
    node->degree = degree;
    node->lines = idx;
    if (degree == 1) return node;

    // Condition (iii): a plane whose complement is nice for degree-1.
    std::vector<QVector> planes;
    if (degree == 2) {
      planes.push_back(nullspace(QMatrix{c_[idx[0]].p, c_[idx[0]].q}, 4).at(0));
    } else {
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          if (meet_[idx[a]][idx[b]]) planes.push_back(plane_through(c_[idx[a]], c_[idx[b]]));
        }
      }
    }
    bool plane_found = false;
    for (const auto& h : planes) {
      Mask rest = 0;
      std::vector<std::size_t> inside;
      for (auto i : idx) {
        if (c_[i].in_plane(h)) {
          inside.push_back(i);
        } else {
          rest |= Mask{1} << i;
        }
      }
      auto sub = search(rest, degree - 1);
      if (sub) {
        node->plane = h;
        node->in_plane = inside;
        node->rest_certificate = sub;
        plane_found = true;
        break;
      }
    }
    if (!plane_found) return nullptr;

    // Conditions (i), (ii): D-1 disjoint lines each meeting D-2 lines of a nice Y.
    for (const auto& zs : subsets_of_size(idx.size(), degree - 1)) {
      std::vector<std::size_t> z;
      for (auto k : zs) z.push_back(idx[k]);
      bool disjoint = true;
      for (std::size_t a = 0; a < z.size() && disjoint; ++a) {
        for (std::size_t b = a + 1; b < z.size() && disjoint; ++b) disjoint = !meet_[z[a]][z[b]];
      }
      if (!disjoint) continue;
      Mask zmask = 0;
      for (auto i : z) zmask |= Mask{1} << i;
      Mask ymask = mask & ~zmask;
      auto y = mask_indices(ymask);
      bool counts = true;
      for (auto zi : z) {
        std::size_t hits = 0;
        for (auto yi : y) hits += meet_[zi][yi] ? 1 : 0;
        if (hits != degree - 2) {
          counts = false;
          break;
        }
      }
      if (!counts) continue;
      auto ycert = search(ymask, degree - 1);
      if (!ycert) continue;
      node->z = z;
      node->y = y;
      node->y_certificate = ycert;
      return node;
    }
    return nullptr;
  }

  const LineArrangement& c_;
  std::vector<std::vector<bool>> meet_;
  std::map<std::pair<Mask, std::size_t>, std::shared_ptr<const NiceNode>> memo_;
};

bool validate_node(const LineArrangement& c, const NiceNode& node) {
  const std::size_t d = node.degree;
  if (node.lines.size() != (d == 0 ? 0 : binom2(d))) return false;
  if (d == 1) return node.lines.empty();
  if (node.z.size() != d - 1 || node.y.size() != binom2(d - 1)) return false;
  for (std::size_t a = 0; a < node.z.size(); ++a) {
    for (std::size_t b = a + 1; b < node.z.size(); ++b) {
      if (lines_meet(c[node.z[a]], c[node.z[b]])) return false;
    }
    std::size_t hits = 0;
    for (auto yi : node.y) hits += lines_meet(c[node.z[a]], c[yi]) ? 1 : 0;
    if (hits != d - 2) return false;
  }
  if (node.in_plane.size() != d - 1) return false;
  for (auto i : node.in_plane) {
    if (!c[i].in_plane(node.plane)) return false;
  }
  if (!node.y_certificate || !node.rest_certificate) return false;
  if (node.y_certificate->lines != node.y || node.y_certificate->degree != d - 1) return false;
  std::vector<std::size_t> rest;
  for (auto i : node.lines) {
    if (!c[i].in_plane(node.plane)) rest.push_back(i);
  }
  if (node.rest_certificate->lines != rest || node.rest_certificate->degree != d - 1) return false;
  return validate_node(c, *node.y_certificate) && validate_node(c, *node.rest_certificate);
}

}  // namespace

std::optional<NiceCertificate> is_nice(const LineArrangement& c, std::size_t degree) {
  if (degree == 0) throw PreconditionError("degree must be at least one");
  if (c.size() > 63) throw PreconditionError("nice search limited to 63 lines");
  check_arrangement(c);
  if (c.size() != binom2(degree)) return std::nullopt;
  if (three_concurrent(c)) return std::nullopt;
  NiceSearch s(c);
  Mask all = c.empty() ? 0 : (c.size() == 64 ? ~Mask{0} : (Mask{1} << c.size()) - 1);
  auto root = s.search(all, degree);
  if (!root) return std::nullopt;
  return NiceCertificate{degree, root};
}

bool validate_nice_certificate(const LineArrangement& c, const NiceCertificate& cert) {
  if (!cert.root || cert.root->degree != cert.degree) return false;
  if (cert.root->lines.size() != c.size()) return false;
  if (three_concurrent(c)) return false;
  return validate_node(c, *cert.root);
}

std::optional<NiceSubarrangement> find_nice_subarrangement(const LineArrangement& lines, std::size_t degree) {
  if (degree == 0) throw PreconditionError("degree must be at least one");
  check_arrangement(lines);
  for (const auto& subset : subsets_of_size(lines.size(), binom2(degree))) {
    LineArrangement sub;
    for (auto i : subset) sub.push_back(lines[i]);
    if (three_concurrent(sub)) continue;
    auto cert = is_nice(sub, degree);
    if (cert) return NiceSubarrangement{subset, *cert};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- h0

std::size_t h0_vanishing_dimension(const LineArrangement& c, int m) {
  if (m < 0) return 0;
  std::vector<Exponents> monos;
  for (std::uint32_t a = 0; a <= static_cast<std::uint32_t>(m); ++a) {
    for (std::uint32_t b = 0; a + b <= static_cast<std::uint32_t>(m); ++b) {
      for (std::uint32_t d = 0; a + b + d <= static_cast<std::uint32_t>(m); ++d) {
        monos.push_back({a, b, d, static_cast<std::uint32_t>(m) - a - b - d});
      }
    }
  }
  QMatrix rows;
  for (const auto& line : c) {
    for (int t = 0; t <= m; ++t) {
      QVector pt(4);
      for (std::size_t i = 0; i < 4; ++i) pt[i] = line.p[i] + Rational(t) * line.q[i];
      QVector row;
      for (const auto& e : monos) {
        Rational v(1);
        for (std::size_t i = 0; i < 4; ++i) v *= pow(pt[i], e[i]);
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
  }
  return monos.size() - (rows.empty() ? 0 : rank(rows));
}

// ---------------------------------------------------------------- singularities

LineArrangement residual_lines(const HPolytope& p) {
  if (p.dim() != 3) throw PreconditionError("residual lines need a 3-polytope");
  auto [vrep, inc] = enumerate_vertices(p);
  LineArrangement out;
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    for (std::size_t j = i + 1; j < p.num_facets(); ++j) {
      const QVector a = p.ambient_form(i), b = p.ambient_form(j);
      if (rank(QMatrix{a, b}) != 2) continue;
      // A line through a vertex contains a face of P.
      bool through_vertex = false;
      for (const auto& fv : inc.facets_of_vertex) {
        if (std::binary_search(fv.begin(), fv.end(), i) && std::binary_search(fv.begin(), fv.end(), j)) {
          through_vertex = true;
          break;
        }
      }
      if (through_vertex) continue;
      Line3 l = Line3::from_planes(a, b, std::make_pair(i, j));
      bool seen = false;
      for (const auto& o : out) seen = seen || o.same_as(l);
      if (!seen) out.push_back(std::move(l));
    }
  }
  return out;
}

std::optional<SingularityWitness> concurrency_singularity_certificate(const HPolytope& p, const Poly& alpha) {
  LineArrangement lines = residual_lines(p);
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      for (std::size_t c = b + 1; c < lines.size(); ++c) {
        std::vector<std::size_t> facets;
        for (auto i : {a, b, c}) {
          facets.push_back(lines[i].facets->first);
          facets.push_back(lines[i].facets->second);
        }
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        QMatrix forms;
        for (auto f : facets) forms.push_back(p.ambient_form(f));
        auto ns = nullspace(forms, 4);
        if (ns.size() != 1) continue;
        auto g = gradient_at(alpha, ns[0]);
        if (!alpha.evaluate(ns[0]).is_zero() || !is_zero(g)) {
          throw CertificateError("adjoint is not singular at a triple point of residual lines");
        }
        return SingularityWitness{ns[0], {a, b, c}, facets};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- quadrics

PolyMatrix detrep_from_codim2_subspace(const Poly& f, const Poly& l1, const Poly& l2) {
  if (!same_registry(f.registry(), l1.registry()) || !same_registry(f.registry(), l2.registry())) {
    throw InputError("quadric and linear forms over different registries");
  }
  if (f.degree() != 2 || !f.is_homogeneous()) throw PreconditionError("f must be a homogeneous quadric");
  if (l1.degree() != 1 || !l1.is_homogeneous() || l2.degree() != 1 || !l2.is_homogeneous()) {
    throw PreconditionError("l1 and l2 must be linear forms");
  }
  const auto reg = f.registry();
  const std::size_t n = reg->size();
  QVector c1 = l1.linear_coefficients(), c2 = l2.linear_coefficients();
  if (rank(QMatrix{c1, c2}) != 2) throw PreconditionError("l1 and l2 are dependent");
  if (!vanishes_on_span(f, nullspace(QMatrix{c1, c2}, n))) {
    throw PreconditionError("f does not vanish on V(l1, l2)");
  }

  // Unknowns: coefficients of q1 then q2.
  std::map<Exponents, std::size_t, GrlexGreater> row_of;
  auto mono = [n](std::size_t i, std::size_t j) {
    Exponents e(n, 0);
    e[i] += 1;
    e[j] += 1;
    return e;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) row_of.emplace(mono(i, j), row_of.size());
  }
  QMatrix a(row_of.size(), QVector(2 * n, Rational(0)));
  QVector rhs(row_of.size(), Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      a[row_of.at(mono(i, k))][k] += c1[i];
      a[row_of.at(mono(i, k))][n + k] += c2[i];
    }
  }
  for (const auto& [e, c] : f.terms()) rhs[row_of.at(e)] = c;
  auto sol = solve(a, rhs);
  if (!sol) throw PreconditionError("f is not in the ideal of (l1, l2)");
  Poly q1 = Poly::linear(reg, QVector(sol->begin(), sol->begin() + static_cast<long>(n)));
  Poly q2 = Poly::linear(reg, QVector(sol->begin() + static_cast<long>(n), sol->end()));
  PolyMatrix m(reg, std::vector<std::vector<Poly>>{{l1, l2}, {-q2, q1}});
  if (!(det(m) == f)) throw CertificateError("2x2 representation does not reproduce f");
  return m;
}

}  // namespace adjrep
