#pragma once

#include <string>
#include <vector>

#include "adjrep/linalg.hpp"
#include "adjrep/poly.hpp"

namespace adjrep {

/// Square matrix of polynomials over one registry.
class PolyMatrix {
 public:
  PolyMatrix(RegistryPtr reg, std::size_t n);
  PolyMatrix(RegistryPtr reg, std::vector<std::vector<Poly>> rows);
  /// Entries given as polynomial text, e.g. {{"x0+x2","x1"},{"0","x3"}}.
  static PolyMatrix parse(RegistryPtr reg, const std::vector<std::vector<std::string>>& rows);
  static PolyMatrix identity(RegistryPtr reg, std::size_t n);

  std::size_t size() const { return n_; }
  const RegistryPtr& registry() const { return reg_; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Poly p);

  /// Every entry has total degree <= 1.
  bool has_linear_entries() const;
  bool is_symmetric() const;
  bool is_tridiagonal() const;

  /// Top-left k x k block.
  PolyMatrix leading(std::size_t k) const;
  /// Matrix with row i and column j removed.
  PolyMatrix minor_matrix(std::size_t i, std::size_t j) const;
  QMatrix evaluate(const std::vector<Rational>& point) const;
  PolyMatrix operator-() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RegistryPtr reg_;
  std::size_t n_;
  std::vector<Poly> entries_;
};

/// Cofactor expansion up to size kCofactorLimit, fraction-free elimination above.
Poly det(const PolyMatrix& m);
inline constexpr std::size_t kCofactorLimit = 6;

/// Laplace expansion, memoized over column subsets; serial reference.
Poly det_cofactor(const PolyMatrix& m);
/// Same recursion with each subset level evaluated by an OpenMP loop.
Poly det_cofactor_parallel(const PolyMatrix& m);
/// Bareiss fraction-free elimination over the polynomial ring.
Poly det_bareiss(const PolyMatrix& m);

}  // namespace adjrep
