#include "adjrep/poly_matrix.hpp"

#include <omp.h>

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "adjrep/error.hpp"

namespace adjrep {

PolyMatrix::PolyMatrix(RegistryPtr reg, std::size_t n)
    : reg_(std::move(reg)), n_(n), entries_(n * n, Poly(reg_)) {
  if (n == 0) throw InputError("matrix size must be positive");
}

PolyMatrix::PolyMatrix(RegistryPtr reg, std::vector<std::vector<Poly>> rows)
    : PolyMatrix(std::move(reg), rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw InputError("matrix is not square");
    for (std::size_t j = 0; j < n_; ++j) set(i, j, std::move(rows[i][j]));
  }
}

PolyMatrix PolyMatrix::parse(RegistryPtr reg, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Poly>> polys;
  for (const auto& row : rows) {
    std::vector<Poly> r;
    for (const auto& s : row) r.push_back(Poly::parse(reg, s));
    polys.push_back(std::move(r));
  }
  return PolyMatrix(std::move(reg), std::move(polys));
}

PolyMatrix PolyMatrix::identity(RegistryPtr reg, std::size_t n) {
  PolyMatrix m(reg, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly::constant(reg, Rational(1)));
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
  if (!same_registry(p.registry(), reg_)) throw InputError("matrix entry over a different registry");
  entries_.at(i * n_ + j) = std::move(p);
}

bool PolyMatrix::has_linear_entries() const {
  for (const auto& e : entries_) {
    if (e.degree() > 1) return false;
  }
  return true;
}

bool PolyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

bool PolyMatrix::is_tridiagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((i > j + 1 || j > i + 1) && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

PolyMatrix PolyMatrix::leading(std::size_t k) const {
  if (k == 0 || k > n_) throw InputError("leading block size out of range");
  PolyMatrix out(reg_, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out.set(i, j, (*this)(i, j));
  }
  return out;
}

PolyMatrix PolyMatrix::minor_matrix(std::size_t i, std::size_t j) const {
  if (n_ < 2) throw InputError("minor of a 1x1 matrix");
  PolyMatrix out(reg_, n_ - 1);
  for (std::size_t r = 0, rr = 0; r < n_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < n_; ++c) {
      if (c == j) continue;
      out.set(rr, cc++, (*this)(r, c));
    }
    ++rr;
  }
  return out;
}

QMatrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
  QMatrix out(n_, QVector(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j).evaluate(point);
  }
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_ || !same_registry(a.reg_, b.reg_)) throw InputError("matrix product shape mismatch");
  PolyMatrix out(a.reg_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t j = 0; j < a.n_; ++j) {
      Poly s(a.reg_);
      for (std::size_t k = 0; k < a.n_; ++k) s += a(i, k) * b(k, j);
      out.set(i, j, std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------- determinants

namespace {

using Mask = std::uint32_t;

// det of the bottom |mask| rows restricted to the columns in mask, expanded
// along the first of those rows.
Poly expand_row(const PolyMatrix& m, Mask mask, const std::unordered_map<Mask, Poly>& below) {
  const std::size_t n = m.size();
  const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
  Poly acc(m.registry());
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Mask bit = Mask{1} << j;
    if (!(mask & bit)) continue;
    const Poly& a = m(row, j);
    if (!a.is_zero()) {
      const Poly& sub = below.at(mask & ~bit);
      if (!sub.is_zero()) {
        if (sign > 0) {
          acc += a * sub;
        } else {
          acc -= a * sub;
        }
      }
    }
    sign = -sign;
  }
  return acc;
}

std::vector<std::vector<Mask>> masks_by_popcount(std::size_t n) {
  std::vector<std::vector<Mask>> levels(n + 1);
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) levels[std::popcount(mask)].push_back(mask);
  return levels;
}

Poly cofactor_dp(const PolyMatrix& m, bool parallel) {
  const std::size_t n = m.size();
  if (n > 24) throw PreconditionError("cofactor expansion limited to 24 columns");
  auto levels = masks_by_popcount(n);
  std::unordered_map<Mask, Poly> prev;
  prev.emplace(Mask{0}, Poly::constant(m.registry(), Rational(1)));
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& level = levels[k];
    std::vector<Poly> values(level.size(), Poly(m.registry()));
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::size_t t = 0; t < level.size(); ++t) values[t] = expand_row(m, level[t], prev);
    } else {
      for (std::size_t t = 0; t < level.size(); ++t) values[t] = expand_row(m, level[t], prev);
    }
    std::unordered_map<Mask, Poly> cur;
    cur.reserve(level.size());
    for (std::size_t t = 0; t < level.size(); ++t) cur.emplace(level[t], std::move(values[t]));
    prev = std::move(cur);
  }
  return prev.at((Mask{1} << n) - 1);
}

}  // namespace

Poly det_cofactor(const PolyMatrix& m) { return cofactor_dp(m, false); }

Poly det_cofactor_parallel(const PolyMatrix& m) { return cofactor_dp(m, true); }

Poly det_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Poly>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  }
  Poly prev = Poly::constant(m.registry(), Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Poly(m.registry());
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw CertificateError("Bareiss step produced an inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Poly(m.registry());
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

Poly det(const PolyMatrix& m) {
  if (m.size() <= kCofactorLimit) {
    return omp_get_max_threads() > 1 && m.size() >= 5 ? det_cofactor_parallel(m) : det_cofactor(m);
  }
  return det_bareiss(m);
}

}  // namespace adjrep
