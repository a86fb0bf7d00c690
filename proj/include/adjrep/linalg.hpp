#pragma once

#include <optional>
#include <vector>

#include "adjrep/rational.hpp"

namespace adjrep {

using QVector = std::vector<Rational>;
/// Row-major dense rational matrix.
using QMatrix = std::vector<QVector>;

struct RowEchelon {
  QMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

RowEchelon row_reduce(QMatrix m, std::size_t cols);
std::size_t rank(const QMatrix& m);
/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
QMatrix nullspace(const QMatrix& m, std::size_t cols);
/// A solution of a x = b with free variables set to zero, or empty if inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);
Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);
QMatrix transpose(const QMatrix& m);
QVector mat_vec(const QMatrix& m, const QVector& v);
Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);
/// True when the two vectors are linearly dependent.
bool parallel(const QVector& a, const QVector& b);

}  // namespace adjrep
