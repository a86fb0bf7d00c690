#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjrep/poly.hpp"
#include "adjrep/poly_matrix.hpp"

namespace adjrep {

using Diagonal = std::pair<unsigned, unsigned>;  // (i, j), 1 <= i < j <= n

/// Triangulation of the convex n-gon with vertices 1..n.
struct Triangulation {
  unsigned n = 0;
  std::vector<Diagonal> diagonals;  // sorted

  bool contains(Diagonal d) const;
  /// n-3 pairwise non-crossing diagonals of the n-gon.
  bool valid() const;
};

bool diagonals_cross(Diagonal a, Diagonal b);
/// All diagonals of the n-gon in lexicographic order.
std::vector<Diagonal> polygon_diagonals(unsigned n);

/// Root-triangle recursion on the edge (1, n); output sorted lexicographically.
std::vector<Triangulation> enumerate_triangulations(unsigned n);

/// X13, X24, ...; X1_10 once a label reaches 10.
std::string diagonal_name(Diagonal d);
/// One variable per diagonal, in polygon_diagonals order.
RegistryPtr assoc_registry(unsigned n);
std::size_t diagonal_index(const RegistryPtr& reg, Diagonal d);

/// Sum over triangulations T of the product of X_ij over diagonals not in T.
Poly universal_adjoint_assoc(unsigned n);

struct AVCertificate {
  PolyMatrix matrix;
  std::vector<std::size_t> primary_vars;
  std::vector<std::size_t> secondary_vars;
  Rational scalar;  // det(matrix) = scalar * f
};

struct AVCheck {
  std::optional<AVCertificate> certificate;
  std::string diagnostic;
};

/// Structural predicate plus det(m) = c * f.
AVCheck check_av_representation(const PolyMatrix& m, const Poly& f, const std::vector<std::size_t>& primary);
std::optional<AVCertificate> is_av_representation(const PolyMatrix& m, const Poly& f,
                                                  const std::vector<std::size_t>& primary);

/// d_i f * d_j f - f * d_i d_j f.
Poly rayleigh_difference(const Poly& f, std::size_t i, std::size_t j);

/// Derivative with respect to each listed variable in turn.
Poly derivative_all(const Poly& f, const std::vector<std::size_t>& vars);

/// Largest monomial (with rational content) dividing f, and the cofactor.
std::pair<Poly, Poly> split_monomial_factor(const Poly& f);

enum class Verdict { Obstructed, Inconclusive };
std::string to_string(Verdict v);

struct ObstructionResult {
  Verdict verdict = Verdict::Inconclusive;
  Poly f2, f1, f0;
  Poly disc;
  std::optional<std::pair<Rational, Poly>> witness;  // disc = lambda * t^2
};

/// Discriminant test for f = (A + B v)(C + D v). Requires deg_v f = 2.
ObstructionResult affine_factor_obstruction(const Poly& f, std::size_t v);

/// Connectivity of the Rayleigh-difference graph on the variables of f.
bool multiaffine_delta_irreducible(const Poly& f);

// ---------------------------------------------------------------- certificate chain

/// Evidence that no AV-representation uses the given secondary set.
struct ObstructionWitness {
  std::string reason;  // "no_primary_monomial", "degree_in_primary", "affine_factor"
  std::vector<std::size_t> derived_by;  // variables differentiated away first
  std::size_t i = 0, j = 0, v = 0;      // Rayleigh pair and primary variable
  Poly monomial;                        // Rayleigh difference = monomial * cofactor
  Poly cofactor;
  Poly disc;
};

struct SecondaryClass {
  std::vector<std::size_t> secondary;
  bool is_triangulation = false;
  std::string shape;  // hexagon only: snake, fan, triangle
  std::optional<ObstructionWitness> witness;
};

/// Searches Rayleigh pairs of primary variables of f for an affine-factor
/// obstruction (or a primary variable of degree > 2 in some difference).
std::optional<ObstructionWitness> find_av_obstruction(const Poly& f, const std::vector<std::size_t>& primary);

/// snake, fan or triangle for a hexagon triangulation.
std::string hexagon_shape(const Triangulation& t);

/// All three-element secondary sets for Adj_3, each either obstructed or left open.
std::vector<SecondaryClass> classify_hexagon_secondaries();

struct ChainStep {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct HeptagonCandidate {
  Triangulation secondary;
  std::vector<unsigned> free_vertices;
  std::string excluded_by;  // "hexagon_reduction" or "rayleigh" or empty
  std::optional<unsigned> reduction_vertex;
  std::optional<ObstructionWitness> witness;
};

struct ObstructionChain {
  std::vector<ChainStep> steps;
  std::vector<SecondaryClass> hexagon;
  std::vector<HeptagonCandidate> heptagon;
  bool ok() const;
};

/// Certificate chain showing Adj_4 (n = 7) has no AV-representation.
ObstructionChain heptagon_obstruction_chain();

/// d Adj_{n-2} / d(all X_{i,n+1}) remapped to the n-gon registry, compared with Adj_{n-3}.
bool derivative_reduction_holds(unsigned n);

}  // namespace adjrep
