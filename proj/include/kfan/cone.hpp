#pragma once

#include <optional>
#include <set>

#include "linalg.hpp"

namespace kfan {

// unique expansion of v in the rays when v lies in their span; the rays must
// be linearly independent
inline std::optional<VecQ> cone_coordinates(const std::vector<VecZ>& rays, const VecQ& v) {
  int d = static_cast<int>(rays.size());
  int n = static_cast<int>(v.size());
  if (d == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return VecQ{};
  }
  MatQ a(n, VecQ(d + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < d; ++c) a[r][c] = Rat(rays[c][r]);
    a[r][d] = v[r];
  }
  auto rr = rref(a);
  int rayRank = 0;
  for (int p : rr.pivots) {
    if (p == d) return std::nullopt;  // inconsistent: v outside the span
    ++rayRank;
  }
  if (rayRank < d) throw Error("non-simplicial cone");
  VecQ coords(d, Rat(0));
  for (size_t i = 0; i < rr.pivots.size(); ++i) coords[rr.pivots[i]] = rr.mat[i][d];
  return coords;
}

inline bool cone_contains(const std::vector<VecZ>& rays, const VecQ& v) {
  auto c = cone_coordinates(rays, v);
  if (!c) return false;
  for (const auto& x : *c)
    if (x < 0) return false;
  return true;
}

inline bool cone_relint_contains(const std::vector<VecZ>& rays, const VecQ& v) {
  auto c = cone_coordinates(rays, v);
  if (!c) return false;
  for (const auto& x : *c)
    if (x <= 0) return false;
  return true;
}

inline int cone_dim(const std::vector<VecZ>& rays) {
  if (rays.empty()) return 0;
  MatQ m(rays.size());
  for (size_t i = 0; i < rays.size(); ++i) m[i] = to_vecq(rays[i]);
  return mat_rank_q(m);
}

inline Int cone_multiplicity(const std::vector<VecZ>& rays) {
  int d = static_cast<int>(rays.size());
  if (d == 0) return 1;
  auto s = smith_normal_form(rays);
  Int prod = 1;
  for (const auto& x : s.diagonal) {
    if (x == 0) throw Error("non-simplicial cone");
    prod *= x;
  }
  if (static_cast<int>(s.diagonal.size()) < d) throw Error("non-simplicial cone");
  return prod;
}

struct BoxPoint {
  VecZ point;
  VecQ coords;  // expansion in the cone's rays, entries in [0,1)
};

// nonzero lattice points of the half-open parallelepiped spanned by the rays,
// one per coset of the ray sublattice, found through the Smith transform
inline std::vector<BoxPoint> box_points(const std::vector<VecZ>& rays) {
  int d = static_cast<int>(rays.size());
  if (d == 0) return {};
  int n = static_cast<int>(rays[0].size());
  auto s = smith_normal_form(rays);
  if (static_cast<int>(s.diagonal.size()) < d) throw Error("non-simplicial cone");
  for (const auto& x : s.diagonal)
    if (x == 0) throw Error("non-simplicial cone");

  std::vector<BoxPoint> out;
  VecZ k(d, Int(0));
  while (true) {
    // advance the odometer first so the all-zero coset is skipped
    int j = 0;
    while (j < d) {
      ++k[j];
      if (k[j] < s.diagonal[j]) break;
      k[j] = 0;
      ++j;
    }
    if (j == d) break;

    VecQ c(d, Rat(0));
    for (int col = 0; col < d; ++col) {
      Rat acc = 0;
      for (int i = 0; i < d; ++i) acc += Rat(k[i], s.diagonal[i]) * Rat(s.left[i][col]);
      c[col] = rat_frac(acc);
    }
    VecZ point(n, Int(0));
    for (int col = 0; col < n; ++col) {
      Rat acc = 0;
      for (int i = 0; i < d; ++i) acc += c[i] * Rat(rays[i][col]);
      if (rat_den(acc) != 1) throw Error("internal: box point is not integral");
      point[col] = rat_num(acc);
    }
    out.push_back({std::move(point), std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [](const BoxPoint& a, const BoxPoint& b) { return a.point < b.point; });
  return out;
}

// rational covector taking the value one on every ray, hence positive on the
// whole cone minus the origin
inline VecQ unit_covector(const std::vector<VecZ>& rays) {
  int d = static_cast<int>(rays.size());
  if (d == 0) return {};
  int n = static_cast<int>(rays[0].size());
  MatQ aug(d, VecQ(n + 1, Rat(0)));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < n; ++c) aug[r][c] = Rat(rays[r][c]);
    aug[r][n] = 1;
  }
  auto rr = rref(aug);
  VecQ h(n, Rat(0));
  for (size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == n) throw Error("non-simplicial cone");
    h[rr.pivots[i]] = rr.mat[i][n];
  }
  return h;
}

// lattice volume of the cone clipped to <h, x> <= 1; additive across
// subdivisions of the clipped region
inline Rat clipped_volume(const std::vector<VecZ>& rays, const VecQ& h) {
  Rat denom = 1;
  for (const auto& r : rays) {
    Rat v = 0;
    for (size_t c = 0; c < h.size(); ++c) v += h[c] * Rat(r[c]);
    if (v <= 0) throw Error("clipping covector is not positive on the cone");
    denom *= v;
  }
  return Rat(cone_multiplicity(rays)) / denom;
}

struct HRep {
  MatZ spanEq;     // <e, x> = 0 cuts out the linear span
  MatZ facetIneq;  // <f, x> >= 0 cuts out the cone inside the span
};

// kernel of a possibly empty row system over an n-dimensional space
inline MatZ kernel_basis_z_dim(MatQ rows, int n) {
  if (rows.empty()) rows.push_back(VecQ(n, Rat(0)));
  return kernel_basis_z(rows);
}

inline HRep cone_hrep(const std::vector<VecZ>& rays, int n) {
  HRep out;
  MatQ m(rays.size(), VecQ(n));
  for (size_t i = 0; i < rays.size(); ++i) m[i] = to_vecq(rays[i]);
  out.spanEq = kernel_basis_z(m);
  int d = static_cast<int>(rays.size());
  for (int skip = 0; skip < d; ++skip) {
    MatQ rows;
    for (int i = 0; i < d; ++i)
      if (i != skip) rows.push_back(to_vecq(rays[i]));
    for (const auto& e : out.spanEq) rows.push_back(to_vecq(e));
    auto ker = kernel_basis_z_dim(rows, n);
    if (ker.size() != 1) throw Error("non-simplicial cone");
    VecZ f = ker[0];
    Int side = dot_zz(f, rays[skip]);
    if (side == 0) throw Error("non-simplicial cone");
    if (side < 0) f = vec_neg(f);
    out.facetIneq.push_back(std::move(f));
  }
  return out;
}

// extreme rays of the intersection of two simplicial cones, primitive and
// sorted; empty when the cones meet only at the origin
inline std::vector<VecZ> intersect_cones(const std::vector<VecZ>& raysA,
                                         const std::vector<VecZ>& raysB, int n) {
  if (raysA.empty() || raysB.empty()) return {};
  HRep ha = cone_hrep(raysA, n);
  HRep hb = cone_hrep(raysB, n);
  MatZ eq = ha.spanEq;
  eq.insert(eq.end(), hb.spanEq.begin(), hb.spanEq.end());
  MatZ ineq = ha.facetIneq;
  ineq.insert(ineq.end(), hb.facetIneq.begin(), hb.facetIneq.end());

  int m = static_cast<int>(ineq.size());
  std::set<VecZ> found;
  // an extreme ray is the kernel line of n-1 independent active constraints
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) > n - 1) continue;
    MatQ rows;
    for (const auto& e : eq) rows.push_back(to_vecq(e));
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) rows.push_back(to_vecq(ineq[i]));
    if (mat_rank_q(rows) != n - 1) continue;
    auto ker = kernel_basis_z_dim(rows, n);
    if (ker.size() != 1) continue;
    VecZ v = ker[0];
    bool nonneg = true, nonpos = true;
    for (const auto& f : ineq) {
      Int s = dot_zz(f, v);
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg)
      found.insert(v);
    else if (nonpos)
      found.insert(vec_neg(v));
  }
  return std::vector<VecZ>(found.begin(), found.end());
}

// membership in the hull of an arbitrary generating set via independent
// subsets (Caratheodory)
inline bool cone_contains_hull(const std::vector<VecZ>& gens, const VecQ& v, int n) {
  bool vzero = true;
  for (const auto& x : v) vzero = vzero && x == 0;
  if (vzero) return true;
  if (gens.empty()) return false;
  int g = static_cast<int>(gens.size());
  int d = std::min(n, g);
  for (unsigned mask = 1; mask < (1u << g); ++mask) {
    if (__builtin_popcount(mask) > d) continue;
    std::vector<VecZ> sub;
    for (int i = 0; i < g; ++i)
      if (mask & (1u << i)) sub.push_back(gens[i]);
    if (cone_dim(sub) != static_cast<int>(sub.size())) continue;
    if (cone_contains(sub, v)) return true;
  }
  return false;
}

// facets of the cone spanned by its extreme rays: each entry lists the
// extreme rays lying on one supporting hyperplane
inline std::vector<std::vector<VecZ>> cone_facets(const std::vector<VecZ>& rays, int n) {
  int g = static_cast<int>(rays.size());
  int d = cone_dim(rays);
  MatQ m(rays.size());
  for (size_t i = 0; i < rays.size(); ++i) m[i] = to_vecq(rays[i]);
  MatZ spanEq = kernel_basis_z(m);

  std::set<std::vector<VecZ>> facets;
  if (d <= 1) return {};
  std::vector<int> comb(d - 1);
  for (int i = 0; i < d - 1; ++i) comb[i] = i;
  while (true) {
    MatQ rows;
    for (int i : comb) rows.push_back(to_vecq(rays[i]));
    for (const auto& e : spanEq) rows.push_back(to_vecq(e));
    if (mat_rank_q(rows) == n - 1) {
      auto ker = kernel_basis_z(rows);
      if (ker.size() == 1) {
        VecZ f = ker[0];
        bool pos = false, neg = false;
        for (const auto& r : rays) {
          Int s = dot_zz(f, r);
          if (s > 0) pos = true;
          if (s < 0) neg = true;
        }
        if (!(pos && neg)) {
          if (neg) f = vec_neg(f);
          std::vector<VecZ> face;
          for (const auto& r : rays)
            if (dot_zz(f, r) == 0) face.push_back(r);
          if (!face.empty()) facets.insert(face);
        }
      }
    }
    int p = d - 2;
    while (p >= 0 && comb[p] == g - (d - 1) + p) --p;
    if (p < 0) break;
    ++comb[p];
    for (int q = p + 1; q < d - 1; ++q) comb[q] = comb[q - 1] + 1;
  }
  return std::vector<std::vector<VecZ>>(facets.begin(), facets.end());
}

// triangulation that pulls at the lexicographically smallest extreme ray;
// the choice depends only on the vectors, so shared faces of different cones
// receive matching triangulations
inline std::vector<std::vector<VecZ>> pulling_triangulation(std::vector<VecZ> rays, int n) {
  std::sort(rays.begin(), rays.end());
  int d = cone_dim(rays);
  if (static_cast<int>(rays.size()) == d) return {rays};
  const VecZ& apex = rays[0];
  std::vector<std::vector<VecZ>> out;
  for (const auto& facet : cone_facets(rays, n)) {
    bool hasApex = false;
    for (const auto& r : facet) hasApex = hasApex || r == apex;
    if (hasApex) continue;
    for (auto& sub : pulling_triangulation(facet, n)) {
      sub.push_back(apex);
      std::sort(sub.begin(), sub.end());
      out.push_back(std::move(sub));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kfan
