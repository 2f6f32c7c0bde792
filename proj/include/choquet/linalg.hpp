#pragma once

#include <cstddef>
#include <vector>

namespace choquet {

// Exact Gaussian elimination over any field element with +,-,*,/; the zero
// test is passed in so Rat and Scalar both fit.

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T, class IsZero>
size_t rowEchelon(Matrix<T>& a, std::vector<size_t>& pivotCols, IsZero isZero) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  pivotCols.clear();
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && isZero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    T inv = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] / inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || isZero(a[i][c])) continue;
      T f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivotCols.push_back(c);
    ++r;
  }
  return r;
}

template <class T, class IsZero>
size_t matrixRank(Matrix<T> a, IsZero isZero) {
  std::vector<size_t> pc;
  return rowEchelon(a, pc, isZero);
}

// Basis of {x : A x = 0}, one vector per free column, reduced form.
template <class T, class IsZero>
Matrix<T> nullspaceBasis(Matrix<T> a, size_t cols, IsZero isZero) {
  std::vector<size_t> pc;
  size_t rank = rowEchelon(a, pc, isZero);
  std::vector<bool> isPivot(cols, false);
  for (size_t c : pc) isPivot[c] = true;
  Matrix<T> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (isPivot[fc]) continue;
    std::vector<T> v(cols, T(0));
    v[fc] = T(1);
    for (size_t i = 0; i < rank; ++i) {
      // pivot row i has 1 at pc[i]
      v[pc[i]] = T(0) - a[i][fc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve A x = b exactly; nullopt-like empty result when inconsistent.
// Returns {solved, x (one particular solution)}.
template <class T, class IsZero>
std::pair<bool, std::vector<T>> solveLinear(Matrix<T> a, std::vector<T> b, IsZero isZero) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<size_t> pc;
  size_t rank = rowEchelon(a, pc, isZero);
  for (size_t i = 0; i < rank; ++i)
    if (pc[i] == cols) return {false, {}}; // pivot in the augmented column
  std::vector<T> x(cols, T(0));
  for (size_t i = 0; i < rank; ++i)
    if (pc[i] < cols) x[pc[i]] = a[i][cols];
  return {true, x};
}

} // namespace choquet
