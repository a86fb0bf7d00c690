#include "adjrep/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "adjrep/error.hpp"

namespace adjrep {

RowEchelon row_reduce(QMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m, m[0].size()).pivots.size();
}

QMatrix nullspace(const QMatrix& m, std::size_t cols) {
  auto ech = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.size() != b.size()) throw InputError("solve: row count mismatch");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  QMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto ech = row_reduce(std::move(aug), cols + 1);
  QVector x(cols, Rational(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == cols) return std::nullopt;
    x[ech.pivots[r]] = ech.reduced[r][cols];
  }
  return x;
}

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return QMatrix{};
  QMatrix aug = m;
  for (std::size_t r = 0; r < n; ++r) {
    aug[r].resize(2 * n, Rational(0));
    aug[r][n + r] = Rational(1);
  }
  auto ech = row_reduce(std::move(aug), 2 * n);
  if (ech.pivots.size() < n || ech.pivots[n - 1] >= n) return std::nullopt;
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) out[r].assign(ech.reduced[r].begin() + static_cast<long>(n), ech.reduced[r].end());
  return out;
}

QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix t(m[0].size(), QVector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
  }
  return t;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
  QVector out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

bool parallel(const QVector& a, const QVector& b) { return rank(QMatrix{a, b}) <= 1; }

}  // namespace adjrep
