#pragma once

#include <array>
#include <cstdlib>
#include <vector>

#include "cy3/common.hpp"

namespace cy3 {

// Dense matrix over an exact field, row-major.
template <class F>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

  F& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  const F& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw Error("matrix shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const F& s = x(i, k);
        if (s.is_zero()) continue;
        for (int j = 0; j < y.cols; ++j) z(i, j) += s * y(k, j);
      }
    return z;
  }

  friend bool operator==(const Mat&, const Mat&) = default;
};

// Reduced row echelon form in place; returns rank.  First-nonzero pivoting,
// fully deterministic.
template <class F>
int rref(Mat<F>& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (!m(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    F inv = F(1) / m(rank, col);
    for (int j = col; j < m.cols; ++j) m(rank, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || m(i, col).is_zero()) continue;
      F f = m(i, col);
      for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class F>
int rank_of(Mat<F> m) {
  return rref(m);
}

// Basis of the right nullspace {x : m x = 0}, one column vector per basis
// element, in the canonical RREF parametrization (free variable set to 1).
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m) {
  int rank = rref(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < m.cols; ++j)
      if (!m(i, j).is_zero()) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  }
  std::vector<std::vector<F>> basis;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<F> v(m.cols, F(0));
    v[j] = F(1);
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -m(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Integer lattice utilities (row lattices of 6-dimensional integer vectors).

using Vec6 = std::array<long long, 6>;

struct IntRows {
  std::vector<std::vector<long long>> rows;  // all the same width
  int cols = 0;
};

// Row Hermite-style echelon basis of the lattice spanned by the input rows
// (integer row reduction by gcd steps).  Result rows have staircase pivots.
IntRows lattice_basis(const IntRows& gens);

// True iff v lies in the lattice with the given echelon basis.
bool lattice_contains(const IntRows& basis, std::vector<long long> v);

int lattice_rank(const IntRows& basis);

// Smith normal form invariant factors d1 | d2 | ... of an integer matrix
// (nonzero ones only, sign-normalized positive).
std::vector<long long> smith_invariants(std::vector<std::vector<long long>> m);

// Solve B x = v for x over the integers, where the rows of B form a lattice
// basis in echelon form and v is in the lattice.  Throws if not solvable.
std::vector<long long> lattice_coordinates(const IntRows& basis,
                                           std::vector<long long> v);

}  // namespace cy3
