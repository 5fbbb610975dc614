#pragma once

#include <random>
#include <vector>

#include "kfan/linalg.hpp"

namespace kfan::testutil {

// Deterministic RNG so every run exercises the same sample set.
inline std::mt19937_64 make_rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline Int rand_int(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Int(d(rng));
}

inline MatZ rand_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  MatZ m(rows, VecZ(cols));
  for (auto& row : m)
    for (auto& x : row) x = rand_int(rng, lo, hi);
  return m;
}

// Independent invariant-factor oracle: d_1 * ... * d_k equals the gcd of all
// k x k minors of the matrix.
inline Int minor_gcd(const MatZ& m, int k) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (k == 0) return 1;
  if (k > rows || k > cols) return 0;
  std::vector<int> ri(k), ci(k);
  Int g = 0;
  std::vector<int> rsel, csel;
  // enumerate k-subsets of rows and columns
  std::vector<int> rcomb(k), ccomb(k);
  for (int i = 0; i < k; ++i) rcomb[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) ccomb[i] = i;
    while (true) {
      MatZ sub(k, VecZ(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = m[rcomb[i]][ccomb[j]];
      g = igcd(g, mat_det(sub));
      int p = k - 1;
      while (p >= 0 && ccomb[p] == cols - k + p) --p;
      if (p < 0) break;
      ++ccomb[p];
      for (int q = p + 1; q < k; ++q) ccomb[q] = ccomb[q - 1] + 1;
    }
    int p = k - 1;
    while (p >= 0 && rcomb[p] == rows - k + p) --p;
    if (p < 0) break;
    ++rcomb[p];
    for (int q = p + 1; q < k; ++q) rcomb[q] = rcomb[q - 1] + 1;
  }
  return g < 0 ? Int(-g) : g;
}

// Independent kernel oracle for n+1 vectors spanning rank n: alternating
// maximal minors give the one-dimensional kernel by Cramer's rule.
inline VecZ cramer_kernel(const std::vector<VecZ>& vectors, int rank) {
  int k = static_cast<int>(vectors.size());
  VecZ out(k);
  for (int skip = 0; skip < k; ++skip) {
    MatZ sub(rank, VecZ(rank));
    int cc = 0;
    for (int c = 0; c < k; ++c) {
      if (c == skip) continue;
      for (int r = 0; r < rank; ++r) sub[r][cc] = vectors[c][r];
      ++cc;
    }
    Int d = mat_det(sub);
    out[skip] = (skip % 2 == 0) ? d : -d;
  }
  return out;
}

}  // namespace kfan::testutil
