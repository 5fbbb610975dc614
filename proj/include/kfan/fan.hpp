#pragma once

#include <map>
#include <string>

#include "cone.hpp"

namespace kfan {

struct Fan {
  int rank = 0;
  std::vector<VecZ> rays;
  std::vector<std::vector<int>> maxCones;  // each entry strictly increasing
};

struct ToricPair {
  Fan fan;
  std::map<int, Rat> coefficients;  // ray index -> boundary coefficient, absent means 0
  std::string label;
};

inline bool fan_equal(const Fan& a, const Fan& b) {
  return a.rank == b.rank && a.rays == b.rays && a.maxCones == b.maxCones;
}

inline void canonicalize_fan(Fan& fan) {
  for (auto& c : fan.maxCones) std::sort(c.begin(), c.end());
  std::sort(fan.maxCones.begin(), fan.maxCones.end());
}

inline std::vector<VecZ> cone_ray_vectors(const Fan& fan, const std::vector<int>& cone) {
  std::vector<VecZ> out;
  out.reserve(cone.size());
  for (int i : cone) out.push_back(fan.rays.at(i));
  return out;
}

inline Rat coefficient_of(const ToricPair& pair, int rayIndex) {
  auto it = pair.coefficients.find(rayIndex);
  return it == pair.coefficients.end() ? Rat(0) : it->second;
}

// log discrepancy assigned to each ray: 1 on boundary-free rays
inline VecQ phi_values(const ToricPair& pair) {
  VecQ out(pair.fan.rays.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = Rat(1) - coefficient_of(pair, static_cast<int>(i));
  return out;
}

// all faces of the fan, the empty face included, each as a sorted index list
inline std::vector<std::vector<int>> fan_faces(const Fan& fan) {
  std::set<std::vector<int>> faces;
  for (const auto& cone : fan.maxCones) {
    int k = static_cast<int>(cone.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) face.push_back(cone[i]);
      faces.insert(std::move(face));
    }
  }
  return std::vector<std::vector<int>>(faces.begin(), faces.end());
}

inline std::vector<std::string> validate_pair(const ToricPair& pair) {
  std::vector<std::string> bad;
  const Fan& fan = pair.fan;
  if (fan.rank < 0) {
    bad.push_back("rank must be nonnegative");
    return bad;
  }
  int n = fan.rank;
  int nrays = static_cast<int>(fan.rays.size());

  for (int i = 0; i < nrays; ++i) {
    const VecZ& r = fan.rays[i];
    if (static_cast<int>(r.size()) != n) {
      bad.push_back("ray " + std::to_string(i) + " has the wrong dimension");
      return bad;
    }
    if (is_zero_vec(r)) {
      bad.push_back("ray " + std::to_string(i) + " is zero");
      continue;
    }
    if (vec_content(r) != 1) bad.push_back("ray " + std::to_string(i) + " is not primitive");
    for (int j = 0; j < i; ++j)
      if (fan.rays[j] == r)
        bad.push_back("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  if (!bad.empty()) return bad;

  if (fan.maxCones.empty()) bad.push_back("fan has no maximal cones");
  std::vector<bool> used(nrays, false);
  for (size_t ci = 0; ci < fan.maxCones.size(); ++ci) {
    const auto& cone = fan.maxCones[ci];
    bool ok = true;
    for (size_t k = 0; k < cone.size(); ++k) {
      if (cone[k] < 0 || cone[k] >= nrays) {
        bad.push_back("cone " + std::to_string(ci) + " has a ray index out of range");
        ok = false;
        break;
      }
      if (k > 0 && cone[k] <= cone[k - 1]) {
        bad.push_back("cone " + std::to_string(ci) + " indices are not strictly increasing");
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int i : cone) used[i] = true;
    if (cone_dim(cone_ray_vectors(fan, cone)) != static_cast<int>(cone.size()))
      bad.push_back("cone " + std::to_string(ci) + " is not simplicial");
    for (size_t cj = 0; cj < ci; ++cj)
      if (fan.maxCones[cj] == cone)
        bad.push_back("cones " + std::to_string(cj) + " and " + std::to_string(ci) + " coincide");
  }
  if (!bad.empty()) return bad;

  for (int i = 0; i < nrays; ++i)
    if (!used[i]) bad.push_back("ray " + std::to_string(i) + " is not used by any maximal cone");

  for (size_t ci = 0; ci < fan.maxCones.size(); ++ci)
    for (size_t cj = 0; cj < fan.maxCones.size(); ++cj) {
      if (ci == cj) continue;
      const auto& a = fan.maxCones[ci];
      const auto& b = fan.maxCones[cj];
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
        bad.push_back("cone " + std::to_string(ci) + " is contained in cone " + std::to_string(cj));
    }
  if (!bad.empty()) return bad;

  // pairwise intersections must be spanned by shared rays
  for (size_t ci = 0; ci < fan.maxCones.size(); ++ci)
    for (size_t cj = ci + 1; cj < fan.maxCones.size(); ++cj) {
      auto meet = intersect_cones(cone_ray_vectors(fan, fan.maxCones[ci]),
                                  cone_ray_vectors(fan, fan.maxCones[cj]), n);
      for (const auto& e : meet) {
        bool inBoth = false;
        for (int ia : fan.maxCones[ci])
          for (int ib : fan.maxCones[cj])
            if (ia == ib && fan.rays[ia] == e) inBoth = true;
        if (!inBoth) {
          bad.push_back("cones " + std::to_string(ci) + " and " + std::to_string(cj) +
                        " do not meet in a common face");
          break;
        }
      }
    }

  for (const auto& [idx, b] : pair.coefficients) {
    if (idx < 0 || idx >= nrays)
      bad.push_back("coefficient key " + std::to_string(idx) + " is out of range");
    else if (b >= 1)
      bad.push_back("coefficient on ray " + std::to_string(idx) + " must be less than 1");
  }
  return bad;
}

inline void require_valid(const ToricPair& pair) {
  auto bad = validate_pair(pair);
  if (!bad.empty()) throw Error("invalid pair: " + bad.front());
}

// value of the support function determined by the ray values phi_i at an
// arbitrary point of the support
inline Rat evaluate_phi(const ToricPair& pair, const VecQ& v) {
  VecQ phi = phi_values(pair);
  for (const auto& cone : pair.fan.maxCones) {
    auto coords = cone_coordinates(cone_ray_vectors(pair.fan, cone), v);
    if (!coords) continue;
    bool inside = true;
    for (const auto& c : *coords) inside = inside && c >= 0;
    if (!inside) continue;
    Rat acc = 0;
    for (size_t i = 0; i < cone.size(); ++i) acc += (*coords)[i] * phi[cone[i]];
    return acc;
  }
  throw Error("point lies outside the fan support");
}

inline bool fan_is_smooth(const Fan& fan) {
  for (const auto& cone : fan.maxCones)
    if (cone_multiplicity(cone_ray_vectors(fan, cone)) != 1) return false;
  return true;
}

inline std::vector<Int> cone_multiplicities(const Fan& fan) {
  std::vector<Int> out;
  out.reserve(fan.maxCones.size());
  for (const auto& cone : fan.maxCones) out.push_back(cone_multiplicity(cone_ray_vectors(fan, cone)));
  return out;
}

struct DiscrepancyWitness {
  VecZ point;         // primitive, in the support, not a ray
  Rat logDiscrepancy;  // phi at the point
};

// primitive non-ray lattice points of the support with phi <= 1, found per
// cone by adding nonnegative ray steps to parallelepiped representatives
inline std::vector<DiscrepancyWitness> low_discrepancy_points(const ToricPair& pair) {
  VecQ phi = phi_values(pair);
  for (const auto& p : phi)
    if (p <= 0) throw Error("coefficient must be less than 1");
  long long cap = env_limit("KFAN_ENUM_CAP", 1000000);

  std::set<VecZ> rayset(pair.fan.rays.begin(), pair.fan.rays.end());
  std::map<VecZ, Rat> hits;
  long long emitted = 0;

  for (const auto& cone : pair.fan.maxCones) {
    auto rays = cone_ray_vectors(pair.fan, cone);
    int d = static_cast<int>(cone.size());
    if (d == 0) continue;
    if (cone_multiplicity(rays) > cap)
      throw Error("enumeration cap exceeded (KFAN_ENUM_CAP)");

    VecQ conePhi(d);
    for (int i = 0; i < d; ++i) conePhi[i] = phi[cone[i]];

    std::vector<std::pair<VecZ, Rat>> seeds;
    seeds.emplace_back(VecZ(rays[0].size(), Int(0)), Rat(0));
    for (const auto& bp : box_points(rays)) {
      Rat val = 0;
      for (int i = 0; i < d; ++i) val += bp.coords[i] * conePhi[i];
      seeds.emplace_back(bp.point, val);
    }

    for (const auto& [seed, seedPhi] : seeds) {
      Rat budget = Rat(1) - seedPhi;
      if (budget < 0) continue;
      // depth-first walk over nonnegative ray multiples within the budget
      std::vector<Int> steps(d, Int(0));
      auto emit = [&](const VecZ& v, const Rat& value) {
        if (is_zero_vec(v)) return;
        if (vec_content(v) != 1) return;
        if (rayset.count(v)) return;
        auto it = hits.find(v);
        if (it == hits.end()) {
          hits.emplace(v, value);
          if (++emitted > cap) throw Error("enumeration cap exceeded (KFAN_ENUM_CAP)");
        }
      };
      auto walk = [&](auto&& self, int pos, VecZ v, Rat value, Rat remaining) -> void {
        if (pos == d) {
          emit(v, value);
          return;
        }
        Int top = rat_floor(remaining / conePhi[pos]);
        VecZ cur = v;
        for (Int t = 0; t <= top; ++t) {
          self(self, pos + 1, cur, value + Rat(t) * conePhi[pos],
               remaining - Rat(t) * conePhi[pos]);
          cur = vec_add(cur, rays[pos]);
        }
      };
      walk(walk, 0, seed, seedPhi, budget);
    }
  }

  std::vector<DiscrepancyWitness> out;
  for (const auto& [v, value] : hits) out.push_back({v, value});
  std::sort(out.begin(), out.end(), [](const DiscrepancyWitness& a, const DiscrepancyWitness& b) {
    if (a.logDiscrepancy != b.logDiscrepancy) return a.logDiscrepancy < b.logDiscrepancy;
    return a.point < b.point;
  });
  return out;
}

// witnesses against terminality: empty exactly when every primitive non-ray
// point of the support has phi > 1
inline std::vector<DiscrepancyWitness> terminal_witnesses(const ToricPair& pair) {
  return low_discrepancy_points(pair);
}

inline bool terminal_check(const ToricPair& pair) { return terminal_witnesses(pair).empty(); }

inline std::vector<VecZ> crepant_rays(const ToricPair& pair) {
  std::vector<VecZ> out;
  for (const auto& w : low_discrepancy_points(pair))
    if (w.logDiscrepancy == 1) out.push_back(w.point);
  return out;
}

inline bool klt_check(const ToricPair& pair) {
  for (const auto& [idx, b] : pair.coefficients)
    if (b >= 1) return false;
  return true;
}

// every explicit coefficient of the shape 1 - 1/m for a positive integer m
inline bool standard_coefficients_check(const ToricPair& pair) {
  for (const auto& [idx, b] : pair.coefficients) {
    Rat onePhi = Rat(1) - b;
    if (onePhi <= 0) return false;
    if (rat_num(onePhi) != 1) return false;
  }
  return true;
}

}  // namespace kfan
