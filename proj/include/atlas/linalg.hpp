#pragma once

#include "atlas/rational.hpp"

namespace atlas {

// Exact dense linear algebra over the rationals. Pivoting is first-nonzero;
// with exact arithmetic any nonzero pivot is valid.

struct SolveResult {
  bool consistent = false;
  bool unique = false;
  RVec x;  // a particular solution when consistent
};

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(RMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(row));
    Rational inv = Rational(1) / m(row, col);
    m.row(row) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col) != 0) {
        m.row(r) -= m(r, col) * m.row(row);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(RMat m) { return static_cast<int>(rref(m).size()); }

inline SolveResult solve(const RMat& a, const RVec& b) {
  RMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<int> pivots = rref(aug);
  SolveResult res;
  if (!pivots.empty() && pivots.back() == a.cols()) return res;  // 0 = 1 row
  res.consistent = true;
  res.unique = static_cast<int>(pivots.size()) == a.cols();
  res.x = RVec::Zero(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) {
    res.x(pivots[r]) = aug(static_cast<int>(r), a.cols());
  }
  return res;
}

// Basis of the null space {x : a x = 0}, returned as matrix columns.
inline RMat kernel(const RMat& a) {
  RMat m = a;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  RMat basis = RMat::Zero(a.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis(fc, static_cast<int>(k)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], static_cast<int>(k)) = -m(static_cast<int>(r), fc);
    }
  }
  return basis;
}

inline RMat inverse(const RMat& a) {
  RMat aug(a.rows(), 2 * a.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(a.cols()) = RMat::Identity(a.rows(), a.cols());
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != a.rows()) {
    throw std::logic_error("inverse of singular matrix");
  }
  return aug.rightCols(a.cols());
}

}  // namespace atlas
