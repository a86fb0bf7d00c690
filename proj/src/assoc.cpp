#include "adjrep/assoc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "adjrep/error.hpp"
#include "adjrep/polytope.hpp"

namespace adjrep {

// ---------------------------------------------------------------- triangulations

bool diagonals_cross(Diagonal a, Diagonal b) {
  auto [i, j] = a;
  auto [k, l] = b;
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

std::vector<Diagonal> polygon_diagonals(unsigned n) {
  std::vector<Diagonal> out;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 2; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      out.emplace_back(i, j);
    }
  }
  return out;
}

bool Triangulation::contains(Diagonal d) const {
  return std::binary_search(diagonals.begin(), diagonals.end(), d);
}

bool Triangulation::valid() const {
  if (n < 3 || diagonals.size() != n - 3) return false;
  auto all = polygon_diagonals(n);
  for (std::size_t a = 0; a < diagonals.size(); ++a) {
    if (!std::binary_search(all.begin(), all.end(), diagonals[a])) return false;
    for (std::size_t b = a + 1; b < diagonals.size(); ++b) {
      if (diagonals[a] == diagonals[b] || diagonals_cross(diagonals[a], diagonals[b])) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<Diagonal>> triangulate(const std::vector<unsigned>& verts) {
  const std::size_t m = verts.size();
  if (m < 3) return {{}};
  std::vector<std::vector<Diagonal>> out;
  for (std::size_t k = 1; k + 1 < m; ++k) {
    std::vector<unsigned> left(verts.begin(), verts.begin() + static_cast<long>(k) + 1);
    std::vector<unsigned> right(verts.begin() + static_cast<long>(k), verts.end());
    auto ls = triangulate(left);
    auto rs = triangulate(right);
    for (const auto& l : ls) {
      for (const auto& r : rs) {
        std::vector<Diagonal> d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (k > 1) d.emplace_back(verts.front(), verts[k]);
        if (k + 2 < m) d.emplace_back(verts[k], verts.back());
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(unsigned n) {
  if (n < 3) throw PreconditionError("triangulations need n >= 3");
  std::vector<unsigned> verts(n);
  for (unsigned i = 0; i < n; ++i) verts[i] = i + 1;
  std::vector<Triangulation> out;
  for (auto& d : triangulate(verts)) {
    std::sort(d.begin(), d.end());
    out.push_back(Triangulation{n, std::move(d)});
  }
  std::sort(out.begin(), out.end(),
            [](const Triangulation& a, const Triangulation& b) { return a.diagonals < b.diagonals; });
  return out;
}

// ---------------------------------------------------------------- universal adjoint

std::string diagonal_name(Diagonal d) {
  if (d.first >= 10 || d.second >= 10) return "X" + std::to_string(d.first) + "_" + std::to_string(d.second);
  return "X" + std::to_string(d.first) + std::to_string(d.second);
}

RegistryPtr assoc_registry(unsigned n) {
  std::vector<std::string> names;
  for (const auto& d : polygon_diagonals(n)) names.push_back(diagonal_name(d));
  return make_registry(std::move(names));
}

std::size_t diagonal_index(const RegistryPtr& reg, Diagonal d) { return reg->index(diagonal_name(d)); }

Poly universal_adjoint_assoc(unsigned n) {
  if (n < 4) throw PreconditionError("associahedron adjoint needs n >= 4");
  auto reg = assoc_registry(n);
  auto diags = polygon_diagonals(n);
  Poly out(reg);
  for (const auto& t : enumerate_triangulations(n)) {
    Exponents e(diags.size(), 0);
    for (std::size_t i = 0; i < diags.size(); ++i) e[i] = t.contains(diags[i]) ? 0 : 1;
    out.add_term(e, Rational(1));
  }
  return out;
}

// ---------------------------------------------------------------- AV-representations

AVCheck check_av_representation(const PolyMatrix& m, const Poly& f, const std::vector<std::size_t>& primary) {
  if (!same_registry(m.registry(), f.registry())) throw InputError("matrix and polynomial over different registries");
  const auto& reg = f.registry();
  if (m.size() != primary.size()) {
    return {std::nullopt, "matrix size " + std::to_string(m.size()) + " differs from " +
                              std::to_string(primary.size()) + " primary variables"};
  }
  std::set<std::size_t> prim(primary.begin(), primary.end());
  if (prim.size() != primary.size()) return {std::nullopt, "repeated primary variable"};
  for (auto v : primary) {
    if (v >= reg->size()) throw InputError("primary variable index out of range");
  }
  auto free_of_primary = [&](const Poly& p) {
    for (auto v : p.variables_used()) {
      if (prim.count(v)) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      Poly e = m(i, j);
      if (i == j) e -= Poly::variable(reg, primary[i]);
      if (!free_of_primary(e)) {
        return {std::nullopt, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") has a misplaced primary variable"};
      }
    }
  }
  auto c = equal_up_to_scalar(det(m), f);
  if (!c) return {std::nullopt, "determinant is not a scalar multiple of the target"};
  std::set<std::size_t> sec;
  for (auto v : f.variables_used()) sec.insert(v);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      for (auto v : m(i, j).variables_used()) sec.insert(v);
    }
  }
  for (auto v : primary) sec.erase(v);
  return {AVCertificate{m, primary, std::vector<std::size_t>(sec.begin(), sec.end()), *c}, ""};
}

std::optional<AVCertificate> is_av_representation(const PolyMatrix& m, const Poly& f,
                                                  const std::vector<std::size_t>& primary) {
  return check_av_representation(m, f, primary).certificate;
}

Poly rayleigh_difference(const Poly& f, std::size_t i, std::size_t j) {
  if (i == j) throw PreconditionError("Rayleigh difference needs two distinct variables");
  Poly fi = f.derivative(i);
  Poly fj = f.derivative(j);
  return fi * fj - f * fi.derivative(j);
}

Poly derivative_all(const Poly& f, const std::vector<std::size_t>& vars) {
  Poly out = f;
  for (auto v : vars) out = out.derivative(v);
  return out;
}

std::pair<Poly, Poly> split_monomial_factor(const Poly& f) {
  const auto& reg = f.registry();
  if (f.is_zero()) return {Poly::constant(reg, Rational(1)), f};
  Exponents g = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
  }
  Poly prim = f.canonical();
  Rational scale = *equal_up_to_scalar(f, prim);
  Poly rest(reg);
  for (const auto& [e, c] : prim.terms()) {
    Exponents r = e;
    for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    rest.add_term(r, c);
  }
  return {Poly::monomial(reg, g, scale), rest};
}

std::string to_string(Verdict v) { return v == Verdict::Obstructed ? "OBSTRUCTED" : "INCONCLUSIVE"; }

ObstructionResult affine_factor_obstruction(const Poly& f, std::size_t v) {
  if (v >= f.num_vars()) throw InputError("variable index out of range");
  if (f.degree_in(v) != 2) throw PreconditionError("polynomial must have degree exactly 2 in the variable");
  Poly f2 = f.coefficient_of(v, 2);
  Poly f1 = f.coefficient_of(v, 1);
  Poly f0 = f.coefficient_of(v, 0);
  Poly disc = f1 * f1 - Rational(4) * f2 * f0;
  std::optional<std::pair<Rational, Poly>> w;
  if (disc.is_zero()) {
    w = std::make_pair(Rational(0), Poly::constant(f.registry(), Rational(1)));
  } else {
    w = perfect_square_up_to_scalar(disc);
  }
  Verdict verdict = w ? Verdict::Inconclusive : Verdict::Obstructed;
  return ObstructionResult{verdict, f2, f1, f0, disc, w};
}

bool multiaffine_delta_irreducible(const Poly& f) {
  if (!f.is_multiaffine()) throw PreconditionError("Rayleigh graph test needs a multi-affine polynomial");
  auto vars = f.variables_used();
  if (vars.size() <= 1) return true;
  std::vector<std::size_t> parent(vars.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t a = 0; a < vars.size(); ++a) {
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      if (root(a) == root(b)) continue;
      if (!rayleigh_difference(f, vars[a], vars[b]).is_zero()) parent[root(a)] = root(b);
    }
  }
  for (std::size_t a = 1; a < vars.size(); ++a) {
    if (root(a) != root(0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- obstruction search

std::optional<ObstructionWitness> find_av_obstruction(const Poly& f, const std::vector<std::size_t>& primary) {
  const auto& reg = f.registry();
  Poly zero(reg);
  Exponents top(reg->size(), 0);
  for (auto v : primary) top[v] = 1;
  if (f.coefficient(top).is_zero()) {
    return ObstructionWitness{"no_primary_monomial", {}, 0, 0, 0, zero, zero, zero};
  }
  for (std::size_t a = 0; a < primary.size(); ++a) {
    for (std::size_t b = a + 1; b < primary.size(); ++b) {
      const std::size_t i = primary[a], j = primary[b];
      Poly delta = rayleigh_difference(f, i, j);
      if (delta.is_zero()) continue;
      auto [mono, rest] = split_monomial_factor(delta);
      for (auto v : primary) {
        if (delta.degree_in(v) > 2) {
          return ObstructionWitness{"degree_in_primary", {}, i, j, v, mono, rest, zero};
        }
      }
      for (auto v : primary) {
        if (rest.degree_in(v) != 2) continue;
        auto r = affine_factor_obstruction(rest, v);
        if (r.verdict == Verdict::Obstructed) {
          return ObstructionWitness{"affine_factor", {}, i, j, v, mono, rest, r.disc};
        }
      }
    }
  }
  return std::nullopt;
}

std::string hexagon_shape(const Triangulation& t) {
  if (t.n != 6 || !t.valid()) throw PreconditionError("hexagon shape needs a hexagon triangulation");
  std::map<unsigned, int> deg;
  for (auto [a, b] : t.diagonals) {
    ++deg[a];
    ++deg[b];
  }
  for (auto [v, d] : deg) {
    if (d == 3) return "fan";
  }
  if (deg.size() == 3) return "triangle";
  return "snake";
}

std::vector<SecondaryClass> classify_hexagon_secondaries() {
  auto reg = assoc_registry(6);
  auto diags = polygon_diagonals(6);
  Poly a3 = universal_adjoint_assoc(6);
  std::vector<SecondaryClass> out;
  for (const auto& s : subsets_of_size(diags.size(), 3)) {
    SecondaryClass c;
    c.secondary = s;
    Triangulation t{6, {}};
    for (auto k : s) t.diagonals.push_back(diags[k]);
    c.is_triangulation = t.valid();
    if (c.is_triangulation) c.shape = hexagon_shape(t);
    std::vector<std::size_t> primary;
    for (std::size_t k = 0; k < diags.size(); ++k) {
      if (!std::binary_search(s.begin(), s.end(), k)) primary.push_back(k);
    }
    c.witness = find_av_obstruction(a3, primary);
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- heptagon chain

bool ObstructionChain::ok() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.ok; });
}

namespace {

std::vector<unsigned> free_vertices(const Triangulation& t) {
  std::vector<unsigned> out;
  for (unsigned v = 1; v <= t.n; ++v) {
    bool used = false;
    for (auto [a, b] : t.diagonals) used = used || a == v || b == v;
    if (!used) out.push_back(v);
  }
  return out;
}

std::vector<Diagonal> diagonals_through(unsigned n, unsigned w) {
  std::vector<Diagonal> out;
  for (const auto& d : polygon_diagonals(n)) {
    if (d.first == w || d.second == w) out.push_back(d);
  }
  return out;
}

// Order-preserving relabeling of the n-gon with w removed onto 1..n-1.
unsigned drop_label(unsigned a, unsigned w) { return a > w ? a - 1 : a; }

// Adjoint of the (n-1)-gon obtained by deleting w, written in the n-gon's labels.
Poly relabeled_smaller_adjoint(unsigned n, unsigned w, const RegistryPtr& target) {
  Poly small = universal_adjoint_assoc(n - 1);
  std::vector<std::string> names;
  for (const auto& d : polygon_diagonals(n - 1)) {
    auto up = [w](unsigned a) { return a >= w ? a + 1 : a; };
    unsigned a = up(d.first), b = up(d.second);
    names.push_back(diagonal_name({std::min(a, b), std::max(a, b)}));
  }
  auto renamed = make_registry(std::move(names));
  return Poly(renamed, small.terms()).remap(target);
}

}  // namespace

ObstructionChain heptagon_obstruction_chain() {
  ObstructionChain chain;
  auto count = [](unsigned n) { return enumerate_triangulations(n).size(); };
  {
    const std::size_t c4 = count(4), c6 = count(6), c7 = count(7);
    chain.steps.push_back({"triangulation_counts", c4 == 2 && c6 == 14 && c7 == 42,
                           std::to_string(c4) + "/" + std::to_string(c6) + "/" + std::to_string(c7)});
  }

  // Hexagon: every secondary set other than a snake is obstructed.
  chain.hexagon = classify_hexagon_secondaries();
  std::size_t non_tri = 0, non_tri_excluded = 0, obstructed = 0, open_snakes = 0, open_other = 0;
  std::set<std::vector<std::size_t>> hexagon_obstructed;
  for (const auto& c : chain.hexagon) {
    if (!c.is_triangulation) {
      ++non_tri;
      if (c.witness) ++non_tri_excluded;
      continue;
    }
    if (c.witness) {
      ++obstructed;
      hexagon_obstructed.insert(c.secondary);
    } else if (c.shape == "snake") {
      ++open_snakes;
    } else {
      ++open_other;
    }
  }
  for (const auto& c : chain.hexagon) {
    if (!c.is_triangulation && c.witness) hexagon_obstructed.insert(c.secondary);
  }
  chain.steps.push_back({"hexagon_classification",
                         non_tri == non_tri_excluded && open_other == 0 && obstructed == 8 && open_snakes == 6,
                         std::to_string(non_tri_excluded) + " non-triangulations excluded, " +
                             std::to_string(obstructed) + " fan/triangle obstructed, " +
                             std::to_string(open_snakes) + " snakes open"});

  // Derivative over the diagonals through any vertex w gives the hexagon adjoint.
  auto reg7 = assoc_registry(7);
  Poly a4 = universal_adjoint_assoc(7);
  bool reduction_ok = true;
  for (unsigned w = 1; w <= 7; ++w) {
    std::vector<std::size_t> vars;
    for (const auto& d : diagonals_through(7, w)) vars.push_back(diagonal_index(reg7, d));
    reduction_ok = reduction_ok && derivative_all(a4, vars) == relabeled_smaller_adjoint(7, w, reg7);
  }
  chain.steps.push_back({"vertex_reduction", reduction_ok, "d Adj_4 / d(diagonals through w) = Adj_3 for w = 1..7"});

  // The lower heptagon triangulation 15, 16, 24, 25 worked by hand.
  {
    auto x = [&](unsigned a, unsigned b) { return Poly::variable(reg7, diagonal_index(reg7, {a, b})); };
    Poly f = derivative_all(a4, {diagonal_index(reg7, {2, 7}), diagonal_index(reg7, {3, 7}),
                                 diagonal_index(reg7, {4, 7})});
    Poly adj3 = universal_adjoint_assoc(6).remap(reg7);
    Poly adj2 = universal_adjoint_assoc(5).remap(reg7);
    bool split = f == x(5, 7) * adj3 + x(1, 6) * x(2, 6) * x(3, 6) * x(4, 6) * adj2;

    auto reg6 = assoc_registry(6);
    Poly a3 = universal_adjoint_assoc(6);
    Poly g = split_monomial_factor(rayleigh_difference(a3, diagonal_index(reg6, {1, 3}),
                                                       diagonal_index(reg6, {1, 5})))
                 .second.remap(reg7);
    Poly mono = x(1, 4) * x(1, 5) * x(1, 6) * x(2, 4) * x(2, 5) * x(2, 6) * x(3, 6) * x(4, 6);
    bool factors = rayleigh_difference(f, diagonal_index(reg7, {1, 3}), diagonal_index(reg7, {5, 7})) == -(mono * g);
    bool obstructed =
        affine_factor_obstruction(g, diagonal_index(reg7, {3, 5})).verdict == Verdict::Obstructed;
    chain.steps.push_back({"lower_snake_instance", split && factors && obstructed,
                           std::string("F = X57 Adj_3 + X16 X26 X36 X46 Adj_2: ") + (split ? "yes" : "no") +
                               ", Rayleigh(X13, X57) = -monomial * G: " + (factors ? "yes" : "no") +
                               ", G in X35: " + (obstructed ? "OBSTRUCTED" : "INCONCLUSIVE")});
  }

  auto diags6 = polygon_diagonals(6);
  auto diags7 = polygon_diagonals(7);
  bool every_free = true;
  std::size_t by_reduction = 0, by_rayleigh = 0, survivors = 0;
  for (const auto& t : enumerate_triangulations(7)) {
    HeptagonCandidate cand{t, free_vertices(t), "", std::nullopt, std::nullopt};
    every_free = every_free && !cand.free_vertices.empty();
    std::vector<std::size_t> primary;
    for (std::size_t k = 0; k < diags7.size(); ++k) {
      if (!t.contains(diags7[k])) primary.push_back(k);
    }
    for (unsigned w : cand.free_vertices) {
      std::vector<std::size_t> sec;
      for (auto [a, b] : t.diagonals) {
        Diagonal d{drop_label(a, w), drop_label(b, w)};
        auto it = std::find(diags6.begin(), diags6.end(), d);
        if (it != diags6.end()) sec.push_back(static_cast<std::size_t>(it - diags6.begin()));
      }
      std::sort(sec.begin(), sec.end());
      if (hexagon_obstructed.count(sec)) {
        cand.excluded_by = "hexagon_reduction";
        cand.reduction_vertex = w;
        break;
      }
    }
    if (cand.excluded_by.empty()) {
      for (unsigned w : cand.free_vertices) {
        auto through = diagonals_through(7, w);
        for (std::size_t keep = 0; keep < through.size() && !cand.witness; ++keep) {
          std::vector<std::size_t> drop;
          for (std::size_t k = 0; k < through.size(); ++k) {
            if (k != keep) drop.push_back(diagonal_index(reg7, through[k]));
          }
          Poly fpart = derivative_all(a4, drop);
          std::vector<std::size_t> prim;
          for (auto v : primary) {
            if (std::find(drop.begin(), drop.end(), v) == drop.end()) prim.push_back(v);
          }
          auto wit = find_av_obstruction(fpart, prim);
          if (wit) {
            wit->derived_by = drop;
            cand.witness = wit;
            cand.excluded_by = "rayleigh";
            cand.reduction_vertex = w;
          }
        }
        if (cand.witness) break;
      }
    }
    if (cand.excluded_by == "hexagon_reduction") {
      ++by_reduction;
    } else if (cand.excluded_by == "rayleigh") {
      ++by_rayleigh;
    } else {
      ++survivors;
    }
    chain.heptagon.push_back(std::move(cand));
  }
  chain.steps.push_back({"free_vertex", every_free, "every heptagon triangulation leaves a vertex without diagonals"});
  chain.steps.push_back({"heptagon_candidates", survivors == 0,
                         std::to_string(by_reduction) + " excluded by hexagon reduction, " +
                             std::to_string(by_rayleigh) + " by Rayleigh obstruction, " +
                             std::to_string(survivors) + " remaining"});
  return chain;
}

bool derivative_reduction_holds(unsigned n) {
  if (n < 4) throw PreconditionError("derivative reduction needs n >= 4");
  Poly big = universal_adjoint_assoc(n + 1);
  auto reg = big.registry();
  std::vector<std::size_t> vars;
  for (const auto& d : diagonals_through(n + 1, n + 1)) vars.push_back(diagonal_index(reg, d));
  Poly reduced = derivative_all(big, vars);
  return reduced.remap(assoc_registry(n)) == universal_adjoint_assoc(n);
}

}  // namespace adjrep
