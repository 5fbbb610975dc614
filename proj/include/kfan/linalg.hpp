#pragma once

#include <algorithm>

#include "numeric.hpp"

namespace kfan {

inline bool is_zero_vec(const VecZ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Int vec_content(const VecZ& v) {
  Int g = 0;
  for (const auto& x : v) g = igcd(g, x);
  return g;
}

inline VecZ primitivize(const VecZ& v) {
  Int g = vec_content(v);
  if (g == 0) throw Error("zero vector has no primitive representative");
  VecZ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

inline VecZ vec_add(const VecZ& a, const VecZ& b) {
  VecZ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline VecZ vec_neg(const VecZ& a) {
  VecZ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline Int dot_zz(const VecZ& a, const VecZ& b) {
  Int acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline Rat dot_zq(const VecZ& a, const VecQ& b) {
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += Rat(a[i]) * b[i];
  return acc;
}

inline MatZ identity_mat(int n) {
  MatZ m(n, VecZ(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline MatZ mat_mul(const MatZ& a, const MatZ& b) {
  int rows = static_cast<int>(a.size());
  int inner = rows ? static_cast<int>(a[0].size()) : 0;
  int cols = inner ? static_cast<int>(b[0].size()) : (b.empty() ? 0 : static_cast<int>(b[0].size()));
  MatZ out(rows, VecZ(cols, Int(0)));
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// fraction-free elimination keeps every intermediate value integral
inline Int mat_det(MatZ m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct SmithResult {
  VecZ diagonal;  // d_i >= 0, d_i | d_{i+1}
  MatZ left;      // unimodular, left * input * right = diag
  MatZ right;
};

inline SmithResult smith_normal_form(MatZ m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  MatZ L = identity_mat(rows), R = identity_mat(cols);

  auto row_swap = [&](int a, int b) {
    std::swap(m[a], m[b]);
    std::swap(L[a], L[b]);
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
    for (int r = 0; r < cols; ++r) std::swap(R[r][a], R[r][b]);
  };
  auto row_add = [&](int dst, int src, const Int& k) {
    for (int c = 0; c < cols; ++c) m[dst][c] += k * m[src][c];
    for (int c = 0; c < rows; ++c) L[dst][c] += k * L[src][c];
  };
  auto col_add = [&](int dst, int src, const Int& k) {
    for (int r = 0; r < rows; ++r) m[r][dst] += k * m[r][src];
    for (int r = 0; r < cols; ++r) R[r][dst] += k * R[r][src];
  };
  auto row_negate = [&](int a) {
    for (int c = 0; c < cols; ++c) m[a][c] = -m[a][c];
    for (int c = 0; c < rows; ++c) L[a][c] = -L[a][c];
  };

  int k = std::min(rows, cols);
  for (int t = 0; t < k; ++t) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          if (bi < 0 || iabs(m[i][j]) < iabs(m[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) {
        t = k;  // remaining block is zero
        break;
      }
      if (bi != t) row_swap(bi, t);
      if (bj != t) col_swap(bj, t);

      bool cleared = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_add(i, t, -(m[i][t] / m[t][t]));
        if (m[i][t] != 0) cleared = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_add(j, t, -(m[t][j] / m[t][t]));
        if (m[t][j] != 0) cleared = false;
      }
      if (!cleared) continue;

      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (m[i][j] % m[t][t] != 0) {
            row_add(t, i, Int(1));
            fixed = true;
          }
      if (fixed) continue;

      if (m[t][t] < 0) row_negate(t);
      break;
    }
    if (t >= k) break;
  }

  SmithResult out;
  out.diagonal.resize(k);
  for (int i = 0; i < k; ++i) out.diagonal[i] = m[i][i];
  out.left = std::move(L);
  out.right = std::move(R);
  return out;
}

// row-style Hermite form of a full-rank square integer matrix: the canonical
// lower-triangular basis of its row lattice, positive diagonal, entries below
// each pivot reduced into [0, pivot)
inline MatZ hermite_normal_form(MatZ m) {
  int n = static_cast<int>(m.size());
  for (int col = n - 1; col >= 0; --col) {
    // gcd the entries of rows [0..col] in this column into row `col`
    while (true) {
      int nz = -1;
      for (int i = 0; i < col; ++i)
        if (m[i][col] != 0) {
          nz = i;
          break;
        }
      if (nz < 0) break;
      if (m[col][col] == 0) {
        std::swap(m[col], m[nz]);
        continue;
      }
      if (iabs(m[nz][col]) < iabs(m[col][col])) std::swap(m[col], m[nz]);
      Int q = m[nz][col] / m[col][col];
      for (int j = 0; j <= col; ++j) m[nz][j] -= q * m[col][j];
    }
    if (m[col][col] == 0) throw Error("matrix is not of full rank");
    if (m[col][col] < 0)
      for (int j = 0; j <= col; ++j) m[col][j] = -m[col][j];
    // reduce the entries below the pivot in later rows
    for (int i = col + 1; i < n; ++i) {
      Int q = m[i][col] / m[col][col];
      if (m[i][col] - q * m[col][col] < 0) q -= 1;
      if (q == 0) continue;
      for (int j = 0; j <= col; ++j) m[i][j] -= q * m[col][j];
    }
  }
  return m;
}

struct RrefResult {
  MatQ mat;
  std::vector<int> pivots;
};

inline RrefResult rref(MatQ a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  RrefResult out;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rat inv = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.mat = std::move(a);
  return out;
}

inline int mat_rank_q(const MatQ& a) { return static_cast<int>(rref(a).pivots.size()); }

inline int mat_rank_z(const MatZ& a) {
  MatQ q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i] = to_vecq(a[i]);
  return mat_rank_q(q);
}

// basis of { x : A x = 0 }, one integral primitive row per free column
inline MatZ kernel_basis_z(const MatQ& a);

inline MatQ kernel_basis(const MatQ& a) {
  auto r = rref(a);
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  std::vector<bool> isPivot(cols, false);
  for (int c : r.pivots) isPivot[c] = true;
  MatQ out;
  for (int f = 0; f < cols; ++f) {
    if (isPivot[f]) continue;
    VecQ x(cols, Rat(0));
    x[f] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = -r.mat[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

inline MatZ kernel_basis_z(const MatQ& a) {
  MatZ out;
  for (const auto& v : kernel_basis(a)) {
    Int l = 1;
    for (const auto& q : v) l = ilcm(l == 0 ? Int(1) : l, rat_den(q));
    VecZ w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = rat_num(v[i]) * (l / rat_den(v[i]));
    out.push_back(primitivize(w));
  }
  return out;
}

// one-dimensional integral kernel of the vectors (taken as columns), scaled
// primitive with positive first nonzero entry
inline VecZ circuit_relation(const std::vector<VecZ>& vectors, int rank) {
  int k = static_cast<int>(vectors.size());
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != rank) throw Error("circuit vector has the wrong length");
  MatQ a(rank, VecQ(k));
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < k; ++c) a[r][c] = Rat(vectors[c][r]);
  auto ker = kernel_basis_z(a);
  if (ker.size() != 1) throw Error("not a circuit");
  VecZ rel = ker[0];
  int first = 0;
  while (first < k && rel[first] == 0) ++first;
  if (first < k && rel[first] < 0)
    for (auto& x : rel) x = -x;
  return rel;
}

}  // namespace kfan
