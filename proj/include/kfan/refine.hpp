#pragma once

#include "fan.hpp"

namespace kfan {

struct RefinementMap {
  Fan source;  // the refined fan
  Fan target;
  std::vector<int> coneAssignment;  // source max cone -> target max cone containing it
};

inline bool refinement_map_consistent(const RefinementMap& m) {
  if (m.coneAssignment.size() != m.source.maxCones.size()) return false;
  std::vector<VecQ> covector(m.target.maxCones.size());
  for (size_t t = 0; t < m.target.maxCones.size(); ++t)
    covector[t] = unit_covector(cone_ray_vectors(m.target, m.target.maxCones[t]));

  std::map<int, Rat> covered;
  for (size_t i = 0; i < m.source.maxCones.size(); ++i) {
    int t = m.coneAssignment[i];
    if (t < 0 || t >= static_cast<int>(m.target.maxCones.size())) return false;
    auto targetRays = cone_ray_vectors(m.target, m.target.maxCones[t]);
    for (int ri : m.source.maxCones[i])
      if (!cone_contains(targetRays, to_vecq(m.source.rays[ri]))) return false;
    covered[t] += clipped_volume(cone_ray_vectors(m.source, m.source.maxCones[i]), covector[t]);
  }
  for (size_t t = 0; t < m.target.maxCones.size(); ++t) {
    auto it = covered.find(static_cast<int>(t));
    if (it == covered.end()) return false;
    if (it->second != cone_multiplicity(cone_ray_vectors(m.target, m.target.maxCones[t])))
      return false;
  }
  return true;
}

struct CommonRefinement {
  Fan fan;
  RefinementMap toA;
  RefinementMap toB;
};

// simultaneous triangulating refinement of two fans with equal support,
// assembled from pairwise cone intersections; multiplicity bookkeeping
// certifies that both supports are covered exactly
inline CommonRefinement common_refinement(const Fan& a, const Fan& b) {
  const char* mismatch = "fans are not birational models of the same support";
  if (a.rank != b.rank) throw Error(mismatch);
  int n = a.rank;

  auto pure_dim = [&](const Fan& f) {
    int d = -1;
    for (const auto& cone : f.maxCones) {
      int cd = static_cast<int>(cone.size());
      if (d < 0) d = cd;
      if (cd != d) throw Error(mismatch);
    }
    return d;
  };
  int d = pure_dim(a);
  if (d != pure_dim(b)) throw Error(mismatch);
  if (d < 0) throw Error(mismatch);

  if (d == 0) {
    Fan point{n, {}, {{}}};
    return {point, {point, a, {0}}, {point, b, {0}}};
  }

  struct Piece {
    std::vector<VecZ> rays;
    int ai, bi;
  };
  std::vector<Piece> pieces;
  for (size_t ai = 0; ai < a.maxCones.size(); ++ai) {
    auto ra = cone_ray_vectors(a, a.maxCones[ai]);
    for (size_t bi = 0; bi < b.maxCones.size(); ++bi) {
      auto rb = cone_ray_vectors(b, b.maxCones[bi]);
      auto meet = intersect_cones(ra, rb, n);
      if (cone_dim(meet) != d) continue;
      for (auto& simplex : pulling_triangulation(meet, n))
        pieces.push_back({std::move(simplex), static_cast<int>(ai), static_cast<int>(bi)});
    }
  }

  std::vector<VecQ> hA(a.maxCones.size()), hB(b.maxCones.size());
  for (size_t i = 0; i < a.maxCones.size(); ++i) hA[i] = unit_covector(cone_ray_vectors(a, a.maxCones[i]));
  for (size_t i = 0; i < b.maxCones.size(); ++i) hB[i] = unit_covector(cone_ray_vectors(b, b.maxCones[i]));
  std::vector<Rat> volA(a.maxCones.size(), Rat(0)), volB(b.maxCones.size(), Rat(0));
  for (const auto& p : pieces) {
    volA[p.ai] += clipped_volume(p.rays, hA[p.ai]);
    volB[p.bi] += clipped_volume(p.rays, hB[p.bi]);
  }
  for (size_t i = 0; i < a.maxCones.size(); ++i)
    if (volA[i] != cone_multiplicity(cone_ray_vectors(a, a.maxCones[i]))) throw Error(mismatch);
  for (size_t i = 0; i < b.maxCones.size(); ++i)
    if (volB[i] != cone_multiplicity(cone_ray_vectors(b, b.maxCones[i]))) throw Error(mismatch);

  std::set<VecZ> rayset;
  for (const auto& p : pieces)
    for (const auto& r : p.rays) rayset.insert(r);
  Fan fan;
  fan.rank = n;
  fan.rays.assign(rayset.begin(), rayset.end());
  std::map<VecZ, int> rayIdx;
  for (size_t i = 0; i < fan.rays.size(); ++i) rayIdx[fan.rays[i]] = static_cast<int>(i);

  struct Entry {
    std::vector<int> cone;
    int ai, bi;
  };
  std::vector<Entry> entries;
  for (const auto& p : pieces) {
    std::vector<int> cone;
    for (const auto& r : p.rays) cone.push_back(rayIdx[r]);
    std::sort(cone.begin(), cone.end());
    entries.push_back({std::move(cone), p.ai, p.bi});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.cone < y.cone; });

  CommonRefinement out;
  out.fan = fan;
  out.toA.source = fan;
  out.toA.target = a;
  out.toB.source = fan;
  out.toB.target = b;
  for (const auto& e : entries) {
    out.fan.maxCones.push_back(e.cone);
    out.toA.coneAssignment.push_back(e.ai);
    out.toB.coneAssignment.push_back(e.bi);
  }
  out.toA.source = out.fan;
  out.toB.source = out.fan;
  return out;
}

// boundary on a refined fan chosen so the support function is carried over
// unchanged; every ray receives an explicit coefficient
inline ToricPair pullback_boundary(const ToricPair& pair, const Fan& refined) {
  ToricPair out;
  out.fan = refined;
  out.label = pair.label;
  for (size_t i = 0; i < refined.rays.size(); ++i)
    out.coefficients[static_cast<int>(i)] = Rat(1) - evaluate_phi(pair, to_vecq(refined.rays[i]));
  return out;
}

enum class Verdict { EQUIVALENT, FIRST_GE, FIRST_LE, INCOMPARABLE };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::EQUIVALENT: return "EQUIVALENT";
    case Verdict::FIRST_GE: return "FIRST_GE";
    case Verdict::FIRST_LE: return "FIRST_LE";
    default: return "INCOMPARABLE";
  }
}

struct KComparison {
  Verdict verdict;
  Fan refinement;
  std::vector<std::pair<VecZ, Rat>> perRayDifference;  // phi_B - phi_A per refinement ray
};

// the two support functions are linear on every refinement cone, so their
// order over the whole support is decided ray by ray
inline KComparison k_compare(const ToricPair& pairA, const ToricPair& pairB) {
  auto common = common_refinement(pairA.fan, pairB.fan);
  KComparison out;
  out.refinement = common.fan;
  bool anyNeg = false, anyPos = false;
  for (const auto& ray : common.fan.rays) {
    Rat diff = evaluate_phi(pairB, to_vecq(ray)) - evaluate_phi(pairA, to_vecq(ray));
    if (diff > 0) anyPos = true;
    if (diff < 0) anyNeg = true;
    out.perRayDifference.emplace_back(ray, diff);
  }
  if (!anyNeg && !anyPos)
    out.verdict = Verdict::EQUIVALENT;
  else if (!anyNeg)
    out.verdict = Verdict::FIRST_GE;
  else if (!anyPos)
    out.verdict = Verdict::FIRST_LE;
  else
    out.verdict = Verdict::INCOMPARABLE;
  return out;
}

struct Subdivision {
  ToricPair pair;
  RefinementMap map;
};

// insert one primitive support point as a new ray, splitting every cone whose
// relative interior chain reaches it; the boundary is pulled back, so the
// support function is unchanged
inline Subdivision stellar_subdivision_at(const ToricPair& pair, const VecZ& w) {
  const Fan& fan = pair.fan;
  for (const auto& r : fan.rays)
    if (r == w) throw Error("subdivision point is already a ray");
  if (is_zero_vec(w) || vec_content(w) != 1) throw Error("subdivision point must be primitive");

  int newIdx = static_cast<int>(fan.rays.size());
  struct Entry {
    std::vector<int> cone;
    int target;
  };
  std::vector<Entry> entries;
  bool found = false;
  for (size_t ci = 0; ci < fan.maxCones.size(); ++ci) {
    const auto& cone = fan.maxCones[ci];
    auto coords = cone_coordinates(cone_ray_vectors(fan, cone), to_vecq(w));
    bool inside = coords.has_value();
    if (inside)
      for (const auto& c : *coords) inside = inside && c >= 0;
    if (!inside) {
      entries.push_back({cone, static_cast<int>(ci)});
      continue;
    }
    found = true;
    for (size_t p = 0; p < cone.size(); ++p) {
      if ((*coords)[p] == 0) continue;
      std::vector<int> piece;
      for (size_t q = 0; q < cone.size(); ++q)
        if (q != p) piece.push_back(cone[q]);
      piece.push_back(newIdx);
      std::sort(piece.begin(), piece.end());
      entries.push_back({std::move(piece), static_cast<int>(ci)});
    }
  }
  if (!found) throw Error("point lies outside the fan support");

  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.cone < y.cone; });

  Fan newFan;
  newFan.rank = fan.rank;
  newFan.rays = fan.rays;
  newFan.rays.push_back(w);
  Subdivision out;
  for (const auto& e : entries) {
    newFan.maxCones.push_back(e.cone);
    out.map.coneAssignment.push_back(e.target);
  }
  ToricPair carrier = pair;
  out.pair = pullback_boundary(carrier, newFan);
  out.pair.label = pair.label;
  out.map.source = newFan;
  out.map.target = fan;
  return out;
}

// subdivision at the primitivized ray sum of a stratum; a single-ray center
// leaves the fan alone and only makes the bookkeeping explicit
inline Subdivision star_subdivision(const ToricPair& pair, std::vector<int> center) {
  std::sort(center.begin(), center.end());
  center.erase(std::unique(center.begin(), center.end()), center.end());
  if (center.empty()) throw Error("center is not a stratum");
  for (int i : center)
    if (i < 0 || i >= static_cast<int>(pair.fan.rays.size())) throw Error("center is not a stratum");
  bool stratum = false;
  for (const auto& cone : pair.fan.maxCones)
    stratum = stratum || std::includes(cone.begin(), cone.end(), center.begin(), center.end());
  if (!stratum) throw Error("center is not a stratum");

  if (center.size() == 1) {
    Subdivision out;
    out.pair = pullback_boundary(pair, pair.fan);
    out.map.source = pair.fan;
    out.map.target = pair.fan;
    out.map.coneAssignment.resize(pair.fan.maxCones.size());
    for (size_t i = 0; i < pair.fan.maxCones.size(); ++i)
      out.map.coneAssignment[i] = static_cast<int>(i);
    return out;
  }

  VecZ sum(pair.fan.rank, Int(0));
  for (int i : center) sum = vec_add(sum, pair.fan.rays[i]);
  return stellar_subdivision_at(pair, primitivize(sum));
}

enum class ResolveStrategy { MinPhi, MaxMult };

struct Resolution {
  ToricPair pair;
  RefinementMap map;
};

// repeated stellar subdivision until every cone is unimodular; the step point
// is a parallelepiped representative of smallest log discrepancy, which keeps
// each step crepant for the pulled-back boundary
inline Resolution resolve(const ToricPair& pair, ResolveStrategy strategy = ResolveStrategy::MinPhi) {
  long long cap = env_limit("KFAN_RESOLVE_CAP", 1000);
  ToricPair current = pair;
  std::vector<int> assignment(pair.fan.maxCones.size());
  for (size_t i = 0; i < assignment.size(); ++i) assignment[i] = static_cast<int>(i);

  for (long long step = 0; step < cap; ++step) {
    VecQ phi = phi_values(current);
    std::vector<int> heavy;
    for (size_t ci = 0; ci < current.fan.maxCones.size(); ++ci)
      if (cone_multiplicity(cone_ray_vectors(current.fan, current.fan.maxCones[ci])) > 1)
        heavy.push_back(static_cast<int>(ci));
    if (heavy.empty()) break;

    auto best_box_point = [&](const std::vector<int>& coneIdxs) {
      bool have = false;
      Rat bestPhi;
      VecZ bestPoint;
      for (int ci : coneIdxs) {
        const auto& cone = current.fan.maxCones[ci];
        auto rays = cone_ray_vectors(current.fan, cone);
        for (const auto& bp : box_points(rays)) {
          Rat value = 0;
          for (size_t i = 0; i < cone.size(); ++i) value += bp.coords[i] * phi[cone[i]];
          if (!have || value < bestPhi || (value == bestPhi && bp.point < bestPoint)) {
            have = true;
            bestPhi = value;
            bestPoint = bp.point;
          }
        }
      }
      return bestPoint;
    };

    VecZ w;
    if (strategy == ResolveStrategy::MinPhi) {
      w = best_box_point(heavy);
    } else {
      int pick = heavy[0];
      Int pickMult = 0;
      std::vector<VecZ> pickKey;
      for (int ci : heavy) {
        auto rays = cone_ray_vectors(current.fan, current.fan.maxCones[ci]);
        std::sort(rays.begin(), rays.end());
        Int m = cone_multiplicity(rays);
        if (m > pickMult || (m == pickMult && rays < pickKey)) {
          pick = ci;
          pickMult = m;
          pickKey = rays;
        }
      }
      w = best_box_point({pick});
    }

    auto sub = stellar_subdivision_at(current, w);
    std::vector<int> next(sub.map.coneAssignment.size());
    for (size_t i = 0; i < next.size(); ++i) next[i] = assignment[sub.map.coneAssignment[i]];
    assignment = std::move(next);
    current = sub.pair;
  }

  if (!fan_is_smooth(current.fan)) throw Error("resolution iteration cap exceeded (KFAN_RESOLVE_CAP)");
  Resolution out;
  out.pair = current;
  out.map.source = current.fan;
  out.map.target = pair.fan;
  out.map.coneAssignment = std::move(assignment);
  return out;
}

}  // namespace kfan
