#pragma once

#include "mckay.hpp"
#include "refine.hpp"
#include "wall.hpp"

namespace kfan {

inline ToricPair make_point() {
  ToricPair p;
  p.fan.rank = 0;
  p.fan.maxCones.push_back({});
  p.label = "pt";
  return p;
}

inline ToricPair make_affine_space(int n) {
  ToricPair p;
  p.fan.rank = n;
  std::vector<int> cone;
  for (int i = 0; i < n; ++i) {
    VecZ e(n, Int(0));
    e[i] = 1;
    p.fan.rays.push_back(e);
    cone.push_back(i);
  }
  p.fan.maxCones.push_back(cone);
  p.label = "C^" + std::to_string(n);
  return p;
}

inline ToricPair make_projective_space(int n) {
  ToricPair p;
  p.fan.rank = n;
  for (int i = 0; i < n; ++i) {
    VecZ e(n, Int(0));
    e[i] = 1;
    p.fan.rays.push_back(e);
  }
  p.fan.rays.push_back(VecZ(n, Int(-1)));
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> cone;
    for (int i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(i);
    p.fan.maxCones.push_back(cone);
  }
  canonicalize_fan(p.fan);
  p.label = "P^" + std::to_string(n);
  return p;
}

inline ToricPair make_p1xp1() {
  ToricPair p;
  p.fan.rank = 2;
  p.fan.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(0)}, {Int(0), Int(-1)}};
  p.fan.maxCones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  canonicalize_fan(p.fan);
  p.label = "P^1xP^1";
  return p;
}

inline ToricPair make_weighted_p12() {
  ToricPair p;
  p.fan.rank = 1;
  p.fan.rays = {{Int(1)}, {Int(-1)}};
  p.fan.maxCones = {{0}, {1}};
  p.coefficients[1] = Rat(1, 2);
  p.label = "P(1,2)";
  return p;
}

inline ToricPair make_blowup_origin_c2() {
  ToricPair p;
  p.fan.rank = 2;
  p.fan.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}};
  p.fan.maxCones = {{0, 2}, {1, 2}};
  p.label = "Bl_0 C^2";
  return p;
}

struct QuotExample {
  ToricPair x;  // boundary-free subdivision at the diagonal junior direction
  ToricPair y;  // orthant in the refined lattice
  int exceptionalRay;
};

inline QuotExample make_quot(int n, int r) {
  if (n < 2 || r < 1) throw Error("quot example needs n >= 2 and r >= 1");
  AbelianGroupData g;
  g.n = n;
  g.generators.push_back({Int(r), VecZ(n, Int(1))});
  auto q = quotient_fan(g);
  QuotExample out;
  out.y = q.pair;
  out.y.label = "quot-" + std::to_string(n) + "-" + std::to_string(r) + "-y";

  VecQ diag(n, Rat(1, r));
  VecQ coords = coords_in_basis(q.basis, diag);
  VecZ w(n);
  for (int i = 0; i < n; ++i) {
    if (rat_den(coords[i]) != 1) throw Error("internal: junior direction outside the lattice");
    w[i] = rat_num(coords[i]);
  }
  auto sub = stellar_subdivision_at(out.y, w);
  out.x = sub.pair;
  out.x.coefficients.clear();
  out.x.label = "quot-" + std::to_string(n) + "-" + std::to_string(r) + "-x";
  out.exceptionalRay = static_cast<int>(out.x.fan.rays.size()) - 1;
  return out;
}

struct FlipExample {
  ToricPair x;
  ToricPair y;
  std::vector<int> wall;
};

// two triangulations of the cone over a product of simplices; the circuit
// relation has r+1 positive and s+1 negative entries
inline FlipExample make_flip(int r, int s) {
  if (r < 1 || s < 1) throw Error("flip example needs r >= 1 and s >= 1");
  int n = r + s + 1;
  FlipExample out;
  out.x.fan.rank = n;
  // rays: a_0, a_1..a_r, b_0, b_1..b_s
  VecZ a0(n, Int(0));
  for (int i = 0; i < r; ++i) a0[i] = -1;
  for (int i = r; i < n; ++i) a0[i] = 1;
  out.x.fan.rays.push_back(a0);
  for (int i = 1; i <= r; ++i) {
    VecZ e(n, Int(0));
    e[i - 1] = 1;
    out.x.fan.rays.push_back(e);
  }
  VecZ b0(n, Int(0));
  b0[n - 1] = 1;
  out.x.fan.rays.push_back(b0);
  for (int j = 1; j <= s; ++j) {
    VecZ e(n, Int(0));
    e[r + j - 1] = 1;
    out.x.fan.rays.push_back(e);
  }
  for (int skip = 0; skip <= r; ++skip) {
    std::vector<int> cone;
    for (int i = 0; i <= r; ++i)
      if (i != skip) cone.push_back(i);
    for (int j = 0; j <= s; ++j) cone.push_back(r + 1 + j);
    std::sort(cone.begin(), cone.end());
    out.x.fan.maxCones.push_back(cone);
  }
  canonicalize_fan(out.x.fan);
  out.x.label = "flip-" + std::to_string(r) + "-" + std::to_string(s) + "-x";

  // the wall omits a_0 and a_1: every b ray plus a_2..a_r
  for (int i = 2; i <= r; ++i) out.wall.push_back(i);
  for (int j = 0; j <= s; ++j) out.wall.push_back(r + 1 + j);
  std::sort(out.wall.begin(), out.wall.end());

  out.y = perform_flip(out.x, out.wall);
  out.y.label = "flip-" + std::to_string(r) + "-" + std::to_string(s) + "-y";
  return out;
}

// threefold flop: two small resolutions around a length-two contraction
inline FlipExample make_francia() {
  FlipExample out;
  out.x.fan.rank = 4;
  out.x.fan.rays = {{Int(-1), Int(-1), Int(1), Int(2)},
                    {Int(1), Int(0), Int(0), Int(0)},
                    {Int(0), Int(1), Int(0), Int(0)},
                    {Int(0), Int(0), Int(1), Int(0)},
                    {Int(0), Int(0), Int(0), Int(1)}};
  out.x.fan.maxCones = {{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}};
  canonicalize_fan(out.x.fan);
  out.x.label = "francia-x";
  out.wall = {0, 3, 4};
  out.y = perform_flip(out.x, out.wall);
  out.y.label = "francia-xplus";
  return out;
}

inline FlipExample make_atiyah() {
  FlipExample out;
  out.x.fan.rank = 3;
  out.x.fan.rays = {{Int(1), Int(0), Int(0)},
                    {Int(0), Int(1), Int(0)},
                    {Int(0), Int(0), Int(1)},
                    {Int(1), Int(1), Int(-1)}};
  out.x.fan.maxCones = {{0, 1, 2}, {0, 1, 3}};
  out.x.label = "atiyah-x";
  out.wall = {0, 1};
  out.y = perform_flip(out.x, out.wall);
  out.y.label = "atiyah-y";
  return out;
}

}  // namespace kfan
