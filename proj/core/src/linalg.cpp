#include "cy3/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace cy3 {

namespace {

void reduce_row_pair(std::vector<long long>& a, std::vector<long long>& b,
                     int col) {
  // Euclid on the col entries of rows a, b until b[col] == 0.
  while (b[col] != 0) {
    long long q = a[col] / b[col];
    for (size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
    std::swap(a, b);
  }
}

}  // namespace

IntRows lattice_basis(const IntRows& gens) {
  IntRows out;
  out.cols = gens.cols;
  std::vector<std::vector<long long>> rows = gens.rows;
  std::vector<std::vector<long long>> basis;
  int col = 0;
  while (col < gens.cols && !rows.empty()) {
    // Move all nonzero col entries into one row by gcd steps.
    int piv = -1;
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i][col] != 0) { piv = (int)i; break; }
    if (piv < 0) { ++col; continue; }
    std::swap(rows[0], rows[(size_t)piv]);
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i][col] != 0) reduce_row_pair(rows[0], rows[i], col);
    if (rows[0][col] < 0)
      for (auto& x : rows[0]) x = -x;
    basis.push_back(rows[0]);
    rows.erase(rows.begin());
    // Drop rows that became zero.
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<long long>& r) {
                                return std::all_of(r.begin(), r.end(),
                                                   [](long long x) { return x == 0; });
                              }),
               rows.end());
    ++col;
  }
  // Reduce entries above each pivot for a canonical staircase.
  for (size_t i = 0; i < basis.size(); ++i) {
    int p = 0;
    while (p < out.cols && basis[i][p] == 0) ++p;
    if (p >= out.cols) continue;
    for (size_t k = 0; k < i; ++k) {
      long long q = basis[k][p] / basis[i][p];
      if (basis[k][p] % basis[i][p] < 0) q -= 1;  // floor; pivot is positive
      if (q != 0)
        for (int j = 0; j < out.cols; ++j) basis[k][j] -= q * basis[i][j];
    }
  }
  out.rows = std::move(basis);
  return out;
}

bool lattice_contains(const IntRows& basis, std::vector<long long> v) {
  for (const auto& row : basis.rows) {
    int p = 0;
    while (p < basis.cols && row[p] == 0) ++p;
    if (p >= basis.cols) continue;
    if (v[p] % row[p] == 0) {
      long long q = v[p] / row[p];
      for (int j = 0; j < basis.cols; ++j) v[j] -= q * row[j];
    }
  }
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

int lattice_rank(const IntRows& basis) {
  int r = 0;
  for (const auto& row : basis.rows)
    if (std::any_of(row.begin(), row.end(), [](long long x) { return x != 0; }))
      ++r;
  return r;
}

std::vector<long long> lattice_coordinates(const IntRows& basis,
                                           std::vector<long long> v) {
  std::vector<long long> coords(basis.rows.size(), 0);
  for (size_t i = 0; i < basis.rows.size(); ++i) {
    const auto& row = basis.rows[i];
    int p = 0;
    while (p < basis.cols && row[p] == 0) ++p;
    if (p >= basis.cols) continue;
    if (v[p] % row[p] != 0) throw Error("vector not in lattice");
    long long q = v[p] / row[p];
    coords[i] = q;
    for (int j = 0; j < basis.cols; ++j) v[j] -= q * row[j];
  }
  if (!std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }))
    throw Error("vector not in lattice");
  return coords;
}

std::vector<long long> smith_invariants(std::vector<std::vector<long long>> m) {
  std::vector<long long> out;
  if (m.empty()) return out;
  size_t rows = m.size(), cols = m[0].size();
  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero pivot.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows && !found; ++i)
      for (size_t j = t; j < cols && !found; ++j)
        if (m[i][j] != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        while (m[i][t] != 0) {
          long long q = m[t][t] / m[i][t];
          for (size_t j = 0; j < cols; ++j) m[t][j] -= q * m[i][j];
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        while (m[t][j] != 0) {
          long long q = m[t][t] / m[t][j];
          for (size_t i = 0; i < rows; ++i) m[i][t] -= q * m[i][j];
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    ++t;
  }
  for (size_t i = 0; i < t; ++i)
    out.push_back(m[i][i] < 0 ? -m[i][i] : m[i][i]);
  // Enforce divisibility d1 | d2 | ...
  for (size_t i = 0; i + 1 < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      long long a = out[i], b = out[j];
      long long g = std::gcd(a, b);
      long long l = a / g * b;
      out[i] = g;
      out[j] = l;
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cy3
