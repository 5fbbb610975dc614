#pragma once

#include <deque>
#include <numeric>

#include "fan.hpp"

namespace kfan {

struct AbelianGroupData {
  int n = 0;
  std::vector<std::pair<Int, VecZ>> generators;  // (order r, weights mod r)
};

inline void normalize_group(AbelianGroupData& g) {
  for (auto& [r, w] : g.generators) {
    if (r <= 0) throw Error("generator order must be positive");
    if (static_cast<int>(w.size()) != g.n) throw Error("generator weights have the wrong length");
    for (auto& x : w) {
      x %= r;
      if (x < 0) x += r;
    }
  }
}

// all elements as weight vectors with entries in [0,1), closed under addition
inline std::vector<VecQ> group_elements(const AbelianGroupData& data, long long cap = 100000) {
  std::set<VecQ> seen;
  std::deque<VecQ> queue;
  VecQ zero(data.n, Rat(0));
  seen.insert(zero);
  queue.push_back(zero);
  std::vector<VecQ> gens;
  for (const auto& [r, w] : data.generators) {
    VecQ g(data.n);
    for (int i = 0; i < data.n; ++i) g[i] = rat_frac(Rat(w[i], r));
    gens.push_back(std::move(g));
  }
  while (!queue.empty()) {
    VecQ cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      VecQ nxt(data.n);
      for (int i = 0; i < data.n; ++i) nxt[i] = rat_frac(cur[i] + g[i]);
      if (seen.insert(nxt).second) {
        if (static_cast<long long>(seen.size()) > cap) throw Error("group order cap exceeded");
        queue.push_back(nxt);
      }
    }
  }
  return std::vector<VecQ>(seen.begin(), seen.end());
}

inline Rat element_age(const VecQ& elem) {
  Rat acc = 0;
  for (const auto& x : elem) acc += x;
  return acc;
}

struct AgeEntry {
  VecQ element;  // exponent tuple, entries in [0,1)
  Rat age;
};

inline std::vector<AgeEntry> age_spectrum(const AbelianGroupData& data) {
  std::vector<AgeEntry> out;
  for (const auto& e : group_elements(data)) out.push_back({e, element_age(e)});
  return out;
}

inline Int junior_count(const AbelianGroupData& data) {
  Int c = 0;
  for (const auto& e : group_elements(data))
    if (element_age(e) == 1) ++c;
  return c;
}

inline bool group_in_sl(const AbelianGroupData& data) {
  for (const auto& [r, w] : data.generators) {
    Int s = 0;
    for (const auto& x : w) s += x;
    if (s % r != 0) return false;
  }
  return true;
}

// Hermite basis of the row lattice of a rectangular integer matrix whose rows
// span a finite-index sublattice of Z^cols
inline MatZ hermite_row_basis(MatZ m, int cols) {
  int rows = static_cast<int>(m.size());
  if (rows < cols) throw Error("matrix is not of full rank");
  for (int col = cols - 1; col >= 0; --col) {
    int pivotRow = rows - cols + col;
    while (true) {
      int nz = -1;
      for (int i = 0; i < pivotRow; ++i)
        if (m[i][col] != 0) {
          nz = i;
          break;
        }
      if (nz < 0) break;
      if (m[pivotRow][col] == 0) {
        std::swap(m[pivotRow], m[nz]);
        continue;
      }
      if (iabs(m[nz][col]) < iabs(m[pivotRow][col])) std::swap(m[pivotRow], m[nz]);
      Int q = m[nz][col] / m[pivotRow][col];
      for (int j = 0; j <= col; ++j) m[nz][j] -= q * m[pivotRow][j];
    }
    if (m[pivotRow][col] == 0) throw Error("matrix is not of full rank");
    if (m[pivotRow][col] < 0)
      for (int j = 0; j <= col; ++j) m[pivotRow][j] = -m[pivotRow][j];
    for (int i = pivotRow + 1; i < rows; ++i) {
      Int q = m[i][col] / m[pivotRow][col];
      if (m[i][col] - q * m[pivotRow][col] < 0) q -= 1;
      if (q == 0) continue;
      for (int j = 0; j <= col; ++j) m[i][j] -= q * m[pivotRow][j];
    }
  }
  MatZ out(cols);
  for (int i = 0; i < cols; ++i) out[i] = m[rows - cols + i];
  return out;
}

struct QuotientFanResult {
  ToricPair pair;     // orthant fan in the refined lattice
  MatQ basis;         // rows: basis of the refined lattice in ambient coordinates
  long long scale;    // common denominator used to build the basis
  MatZ basisNumerators;  // basis * scale, integral
};

// express an ambient point (given over the rationals) in the refined basis;
// integral exactly when the point lies in the refined lattice
inline VecQ coords_in_basis(const MatQ& basis, const VecQ& v) {
  int n = static_cast<int>(basis.size());
  MatQ a(n, VecQ(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = basis[c][r];
    a[r][n] = v[r];
  }
  auto rr = rref(a);
  if (static_cast<int>(rr.pivots.size()) != n) throw Error("internal: basis is singular");
  VecQ out(n);
  for (int i = 0; i < n; ++i) out[i] = rr.mat[i][n];
  return out;
}

// fan of the orthant inside the lattice refined by the group's weight
// vectors; quasi-reflection directions surface as standard coefficients
inline QuotientFanResult quotient_fan(const AbelianGroupData& input) {
  AbelianGroupData data = input;
  normalize_group(data);
  int n = data.n;
  if (n <= 0) throw Error("group dimension must be positive");

  Int scaleInt = 1;
  for (const auto& [r, w] : data.generators) scaleInt = ilcm(scaleInt, r);
  long long scale = static_cast<long long>(scaleInt);

  MatZ stacked;
  for (int i = 0; i < n; ++i) {
    VecZ row(n, Int(0));
    row[i] = scaleInt;
    stacked.push_back(std::move(row));
  }
  for (const auto& [r, w] : data.generators) {
    VecZ row(n);
    for (int i = 0; i < n; ++i) row[i] = w[i] * (scaleInt / r);
    stacked.push_back(std::move(row));
  }
  MatZ h = hermite_row_basis(std::move(stacked), n);

  QuotientFanResult out;
  out.scale = scale;
  out.basisNumerators = h;
  out.basis.assign(n, VecQ(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.basis[i][j] = Rat(h[i][j], scaleInt);

  out.pair.fan.rank = n;
  std::vector<int> cone;
  for (int i = 0; i < n; ++i) {
    VecQ e(n, Rat(0));
    e[i] = 1;
    VecQ c = coords_in_basis(out.basis, e);
    VecZ ray(n);
    for (int j = 0; j < n; ++j) {
      if (rat_den(c[j]) != 1) throw Error("internal: axis is outside the refined lattice");
      ray[j] = rat_num(c[j]);
    }
    Int m = vec_content(ray);
    if (m > 1) out.pair.coefficients[i] = Rat(1) - Rat(1, m);
    out.pair.fan.rays.push_back(primitivize(ray));
    cone.push_back(i);
  }
  out.pair.fan.maxCones.push_back(cone);
  out.pair.label = "C^" + std::to_string(n) + "/G";
  return out;
}

// special-linear abelian subgroups in dimension 2 of a given order: the
// unique diagonal cyclic group
inline std::vector<AbelianGroupData> sl_groups_dim2(int maxOrder) {
  std::vector<AbelianGroupData> out;
  for (int r = 1; r <= maxOrder; ++r) {
    AbelianGroupData g;
    g.n = 2;
    g.generators.push_back({Int(r), {Int(1), Int(r - 1)}});
    out.push_back(std::move(g));
  }
  return out;
}

// special-linear abelian subgroups in dimension 3: subgroups of the torus
// {x+y+z=0} indexed by finite-index sublattices of the plane via duality
inline std::vector<AbelianGroupData> sl_groups_dim3(int maxOrder) {
  std::vector<AbelianGroupData> out;
  for (int m = 1; m <= maxOrder; ++m) {
    for (int a = 1; a <= m; ++a) {
      if (m % a != 0) continue;
      int d = m / a;
      for (int c = 0; c < a; ++c) {
        // dual generators of the subgroup attached to rows [[a,0],[c,d]]
        AbelianGroupData grp;
        grp.n = 3;
        auto add_gen = [&](long long x, long long y) {
          long long gx = ((x % m) + m) % m;
          long long gy = ((y % m) + m) % m;
          long long gz = ((-(gx + gy)) % m + m) % m;
          long long div = std::gcd(std::gcd(gx, gy), std::gcd(gz, static_cast<long long>(m)));
          long long r = m / div;
          if (r == 1) return;
          grp.generators.push_back({Int(r), {Int(gx / div), Int(gy / div), Int(gz / div)}});
        };
        add_gen(d, -c);
        add_gen(0, a);
        if (grp.generators.empty())
          grp.generators.push_back({Int(1), {Int(0), Int(0), Int(0)}});
        out.push_back(std::move(grp));
      }
    }
  }
  return out;
}

}  // namespace kfan
