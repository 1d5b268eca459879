#pragma once

#include <vector>

#include "tldkit/poly.hpp"

namespace tldkit {

// Dense matrix over Poly.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Poly& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const PolyMatrix&) const = default;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix transposed() const;
  PolyMatrix scaled(const Poly& f) const;
  PolyMatrix submatrix(int row0, int col0, int rows, int cols) const;
  // Simultaneous row/column reindexing: result(i,j) = at(perm[i], perm[j]).
  PolyMatrix permuted(const std::vector<int>& perm) const;

  bool is_symmetric() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> a_;
};

// Exact determinant by single-step fraction-free elimination with row
// pivoting; every interior division is exact. 0x0 gives 1.
Poly det_bareiss(PolyMatrix m);

// Independent determinant oracle: evaluate the matrix at enough integer
// points, take integer determinants, and interpolate. Throws InternalError
// if the interpolant is not an integer polynomial.
Poly det_eval_interp(const PolyMatrix& m);

} // namespace tldkit
