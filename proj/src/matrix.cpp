#include "tldkit/matrix.hpp"

#include <utility>

#include "tldkit/errors.hpp"

namespace tldkit {

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw SizeMismatch("matrix product shape mismatch");
  PolyMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Poly& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix sum shape mismatch");
  PolyMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::scaled(const Poly& f) const {
  PolyMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) *= f;
  return r;
}

PolyMatrix PolyMatrix::submatrix(int row0, int col0, int rows, int cols) const {
  PolyMatrix r(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
  return r;
}

PolyMatrix PolyMatrix::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != rows_ || rows_ != cols_)
    throw SizeMismatch("permutation size mismatch");
  PolyMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(perm[i], perm[j]);
  return r;
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Poly det_bareiss(PolyMatrix m) {
  if (m.rows() != m.cols()) throw SizeMismatch("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Poly(BigInt(1));
  int sign = 1;
  Poly prev(BigInt(1));
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Poly();
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    const Poly& pivot = m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const bool row_hits_pivot_col = !m.at(i, k).is_zero();
      for (int j = k + 1; j < n; ++j) {
        Poly num = m.at(i, j) * pivot;
        if (row_hits_pivot_col && !m.at(k, j).is_zero()) num -= m.at(i, k) * m.at(k, j);
        m.at(i, j) = num.is_zero() ? Poly() : divexact(num, prev);
      }
      m.at(i, k) = Poly();
    }
    prev = pivot;
  }
  Poly det = m.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

namespace {

// Integer Bareiss, same scheme as the polynomial version.
BigInt det_bareiss_int(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;  // exact by the minor identity
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

} // namespace

Poly det_eval_interp(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw SizeMismatch("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Poly(BigInt(1));
  long bound = 0;
  for (int i = 0; i < n; ++i) {
    int row_max = 0;
    for (int j = 0; j < n; ++j) row_max = std::max(row_max, std::max(0, m.at(i, j).degree()));
    bound += row_max;
  }
  const long points = bound + 1;
  std::vector<BigInt> xs(points), ys(points);
  for (long t = 0; t < points; ++t) {
    xs[t] = t;
    std::vector<std::vector<BigInt>> mi(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Poly& p = m.at(i, j);
        BigInt acc = 0;
        for (int k = p.degree(); k >= 0; --k) acc = acc * t + p.coeff(k);
        mi[i][j] = acc;
      }
    ys[t] = det_bareiss_int(std::move(mi));
  }
  // Newton's divided differences over exact rationals.
  std::vector<Rational> dd(points);
  for (long t = 0; t < points; ++t) dd[t] = Rational(ys[t]);
  for (long level = 1; level < points; ++level)
    for (long t = points - 1; t >= level; --t)
      dd[t] = (dd[t] - dd[t - 1]) / Rational(xs[t] - xs[t - level]);
  // Expand sum dd[k] * (x - x_0)...(x - x_{k-1}).
  std::vector<Rational> result(points, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (long k = 0; k < points; ++k) {
    for (size_t j = 0; j < basis.size(); ++j) result[j] += dd[k] * basis[j];
    if (k + 1 < points) {
      basis.push_back(Rational(0));
      for (long j = static_cast<long>(basis.size()) - 1; j >= 1; --j)
        basis[j] = basis[j - 1] - Rational(xs[k]) * basis[j];
      basis[0] = -Rational(xs[k]) * basis[0];
    }
  }
  Poly out;
  for (long k = points - 1; k >= 0; --k) {
    if (result[k] == 0) continue;
    if (denominator(result[k]) != 1)
      throw InternalError("interpolated determinant has non-integer coefficient");
    out += Poly::monomial(numerator(result[k]), static_cast<int>(k));
  }
  return out;
}

} // namespace tldkit
