#pragma once

#include <array>
#include <map>
#include <set>

#include "refine.hpp"

namespace kfan {

enum class WallClass { FIBER_TYPE, DIVISORIAL, FLIPPING };
enum class KSign { K_NEGATIVE, K_TRIVIAL, K_POSITIVE };

inline std::string wall_class_name(WallClass c) {
  switch (c) {
    case WallClass::FIBER_TYPE: return "FIBER_TYPE";
    case WallClass::DIVISORIAL: return "DIVISORIAL";
    default: return "FLIPPING";
  }
}

inline std::string k_sign_name(KSign s) {
  switch (s) {
    case KSign::K_NEGATIVE: return "K_NEGATIVE";
    case KSign::K_TRIVIAL: return "K_TRIVIAL";
    default: return "K_POSITIVE";
  }
}

struct WallReport {
  std::vector<int> wall;
  std::array<int, 2> adjacentRays;  // the rays completing the two adjacent cones
  std::vector<int> circuitRays;     // wall rays then the adjacent rays
  VecZ relation;                    // kernel coefficients aligned with circuitRays
  Rat kDegree;
  WallClass classification;
  KSign kSign;
};

// a wall is a codimension-one face shared by exactly two maximal cones; the
// circuit relation is normalized positive on the two adjacent rays, which
// always carry the same sign
inline WallReport wall_analysis(const ToricPair& pair, std::vector<int> wall) {
  const Fan& fan = pair.fan;
  std::sort(wall.begin(), wall.end());
  wall.erase(std::unique(wall.begin(), wall.end()), wall.end());
  for (int i : wall)
    if (i < 0 || i >= static_cast<int>(fan.rays.size())) throw Error("not an interior wall");

  std::vector<int> hosts;
  for (size_t ci = 0; ci < fan.maxCones.size(); ++ci) {
    const auto& cone = fan.maxCones[ci];
    if (cone.size() == wall.size() + 1 &&
        std::includes(cone.begin(), cone.end(), wall.begin(), wall.end()))
      hosts.push_back(static_cast<int>(ci));
  }
  if (hosts.size() != 2) throw Error("not an interior wall");

  WallReport out;
  out.wall = wall;
  std::vector<int> adj;
  for (int h : hosts)
    for (int i : fan.maxCones[h])
      if (!std::binary_search(wall.begin(), wall.end(), i)) adj.push_back(i);
  std::sort(adj.begin(), adj.end());
  out.adjacentRays = {adj[0], adj[1]};
  out.circuitRays = wall;
  out.circuitRays.push_back(adj[0]);
  out.circuitRays.push_back(adj[1]);

  std::vector<VecZ> vectors;
  for (int i : out.circuitRays) vectors.push_back(fan.rays[i]);
  out.relation = circuit_relation(vectors, fan.rank);

  int k = static_cast<int>(out.circuitRays.size());
  Int onFirstAdjacent = out.relation[k - 2];
  if (onFirstAdjacent == 0 || out.relation[k - 1] == 0 ||
      (onFirstAdjacent > 0) != (out.relation[k - 1] > 0))
    throw Error("not an interior wall");
  if (onFirstAdjacent < 0)
    for (auto& x : out.relation) x = -x;

  int negatives = 0;
  for (const auto& x : out.relation)
    if (x < 0) ++negatives;
  out.classification = negatives == 0   ? WallClass::FIBER_TYPE
                       : negatives == 1 ? WallClass::DIVISORIAL
                                        : WallClass::FLIPPING;

  VecQ phi = phi_values(pair);
  out.kDegree = 0;
  for (int i = 0; i < k; ++i) out.kDegree += Rat(out.relation[i]) * phi[out.circuitRays[i]];
  out.kSign = out.kDegree > 0   ? KSign::K_NEGATIVE
              : out.kDegree < 0 ? KSign::K_POSITIVE
                                : KSign::K_TRIVIAL;
  return out;
}

// facets shared by exactly two maximal cones of matching dimension
inline std::vector<std::vector<int>> interior_walls(const Fan& fan) {
  std::map<std::vector<int>, int> count;
  for (const auto& cone : fan.maxCones) {
    for (size_t skip = 0; skip < cone.size(); ++skip) {
      std::vector<int> facet;
      for (size_t i = 0; i < cone.size(); ++i)
        if (i != skip) facet.push_back(cone[i]);
      ++count[facet];
    }
  }
  std::vector<std::vector<int>> walls;
  for (const auto& [facet, c] : count)
    if (c == 2) walls.push_back(facet);
  return walls;
}

struct MinimalModelReport {
  bool minimal;
  std::vector<std::string> failures;
};

// a model over a base is minimal when it refines the base, is terminal, and
// carries no K-negative wall lying over a single base cone
inline MinimalModelReport minimal_model_check(const ToricPair& model, const ToricPair& base) {
  require_valid(model);
  require_valid(base);
  if (model.fan.rank != base.fan.rank) throw Error("pairs must have the same rank");
  common_refinement(model.fan, base.fan);  // certifies equal support

  MinimalModelReport out;
  out.minimal = true;

  auto containing_base_cones = [&](const std::vector<int>& cone) {
    std::set<int> found;
    for (size_t bi = 0; bi < base.fan.maxCones.size(); ++bi) {
      auto baseRays = cone_ray_vectors(base.fan, base.fan.maxCones[bi]);
      bool inside = true;
      for (int i : cone)
        if (!cone_contains(baseRays, to_vecq(model.fan.rays[i]))) {
          inside = false;
          break;
        }
      if (inside) found.insert(static_cast<int>(bi));
    }
    return found;
  };

  std::vector<std::set<int>> targets(model.fan.maxCones.size());
  for (size_t ci = 0; ci < model.fan.maxCones.size(); ++ci) {
    targets[ci] = containing_base_cones(model.fan.maxCones[ci]);
    if (targets[ci].empty()) {
      out.minimal = false;
      out.failures.push_back("model cone " + std::to_string(ci) +
                             " is not contained in any base cone");
    }
  }
  if (!out.minimal) return out;

  auto witnesses = terminal_witnesses(model);
  if (!witnesses.empty()) {
    out.minimal = false;
    out.failures.push_back("model is not terminal");
  }

  for (const auto& wall : interior_walls(model.fan)) {
    std::vector<int> hosts;
    for (size_t ci = 0; ci < model.fan.maxCones.size(); ++ci) {
      const auto& cone = model.fan.maxCones[ci];
      if (cone.size() == wall.size() + 1 &&
          std::includes(cone.begin(), cone.end(), wall.begin(), wall.end()))
        hosts.push_back(static_cast<int>(ci));
    }
    if (hosts.size() != 2) continue;
    bool overOneBaseCone = false;
    for (int bi : targets[hosts[0]])
      if (targets[hosts[1]].count(bi)) overOneBaseCone = true;
    if (!overOneBaseCone) continue;  // wall maps to a base wall
    WallReport report = wall_analysis(model, wall);
    if (report.kSign == KSign::K_NEGATIVE) {
      out.minimal = false;
      std::string ids;
      for (int i : wall) ids += (ids.empty() ? "" : ",") + std::to_string(i);
      out.failures.push_back("wall {" + ids + "} over the base is K-negative");
    }
  }
  return out;
}

// exchange the triangulation of the circuit's positive cones for that of the
// negative ones; rays and boundary are untouched
inline ToricPair perform_flip(const ToricPair& pair, const std::vector<int>& wall) {
  WallReport report = wall_analysis(pair, wall);
  if (report.classification != WallClass::FLIPPING) throw Error("wall is not a flipping wall");

  int k = static_cast<int>(report.circuitRays.size());
  std::vector<int> positive, negative;
  for (int i = 0; i < k; ++i) {
    if (report.relation[i] > 0) positive.push_back(report.circuitRays[i]);
    if (report.relation[i] < 0) negative.push_back(report.circuitRays[i]);
  }
  std::vector<int> circuit = report.circuitRays;
  std::sort(circuit.begin(), circuit.end());

  auto omit = [&](int skip) {
    std::vector<int> cone;
    for (int i : circuit)
      if (i != skip) cone.push_back(i);
    return cone;
  };

  std::set<std::vector<int>> oldCones;
  for (int p : positive) oldCones.insert(omit(p));
  std::set<std::vector<int>> present(pair.fan.maxCones.begin(), pair.fan.maxCones.end());
  for (const auto& c : oldCones)
    if (!present.count(c)) throw Error("flip region is not contained in the fan");

  ToricPair out = pair;
  out.fan.maxCones.clear();
  for (const auto& c : pair.fan.maxCones)
    if (!oldCones.count(c)) out.fan.maxCones.push_back(c);
  for (int q : negative) out.fan.maxCones.push_back(omit(q));
  canonicalize_fan(out.fan);

  auto bad = validate_pair(out);
  if (!bad.empty()) throw Error("flip produced an invalid fan: " + bad.front());
  return out;
}

}  // namespace kfan
