#pragma once

#include "mckay.hpp"
#include "wall.hpp"

namespace kfan {

// multiplicity of the cone measured inside the lattice refined by 1/m along
// every ray carrying a standard coefficient 1 - 1/m
inline Int stack_multiplicity(const ToricPair& pair, const std::vector<int>& cone) {
  int d = static_cast<int>(cone.size());
  if (d == 0) return 1;
  auto rays = cone_ray_vectors(pair.fan, cone);
  auto s = smith_normal_form(rays);
  if (static_cast<int>(s.diagonal.size()) < d) throw Error("non-simplicial cone");
  for (const auto& x : s.diagonal)
    if (x == 0) throw Error("non-simplicial cone");

  // coordinates of the rays in a basis of the saturated span: multiply by the
  // right transform and keep the leading block
  int n = static_cast<int>(rays[0].size());
  MatZ coords(d, VecZ(d, Int(0)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Int acc = 0;
      for (int k = 0; k < n; ++k) acc += rays[i][k] * s.right[k][j];
      coords[i][j] = acc;
    }
  Int plain = 1;
  for (const auto& x : s.diagonal) plain *= x;

  std::vector<Int> orders(d, Int(1));
  Int lcmOrder = 1;
  for (int i = 0; i < d; ++i) {
    Rat b = coefficient_of(pair, cone[i]);
    if (b == 0) continue;
    Rat onePhi = Rat(1) - b;
    if (rat_num(onePhi) != 1 || onePhi <= 0)
      throw Error("categorical rank requires standard coefficients");
    orders[i] = rat_den(onePhi);
    lcmOrder = ilcm(lcmOrder, orders[i]);
  }
  if (lcmOrder == 1) return plain;

  // index of the refined lattice over Z^d via the scaled stacked basis
  MatZ stacked;
  for (int i = 0; i < d; ++i) {
    VecZ row(d, Int(0));
    row[i] = lcmOrder;
    stacked.push_back(std::move(row));
  }
  for (int i = 0; i < d; ++i) {
    if (orders[i] == 1) continue;
    VecZ row(d);
    for (int j = 0; j < d; ++j) row[j] = coords[i][j] * (lcmOrder / orders[i]);
    stacked.push_back(std::move(row));
  }
  MatZ h = hermite_row_basis(std::move(stacked), d);
  Int covol = 1;
  for (int i = 0; i < d; ++i) covol *= h[i][i];
  Int scalePow = 1;
  for (int i = 0; i < d; ++i) scalePow *= lcmOrder;
  if (scalePow % covol != 0) throw Error("internal: refined lattice index is not integral");
  return plain * (scalePow / covol);
}

inline Int categorical_rank(const ToricPair& pair) {
  if (!standard_coefficients_check(pair))
    throw Error("categorical rank requires standard coefficients");
  Int acc = 0;
  for (const auto& cone : pair.fan.maxCones) acc += stack_multiplicity(pair, cone);
  return acc;
}

// quotient of the star of a face: the fan of the corresponding orbit closure,
// carried with an empty boundary
inline ToricPair orbit_closure_pair(const ToricPair& pair, std::vector<int> face) {
  const Fan& fan = pair.fan;
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  for (int i : face)
    if (i < 0 || i >= static_cast<int>(fan.rays.size())) throw Error("center is not a stratum");
  std::vector<int> hosts;
  for (size_t ci = 0; ci < fan.maxCones.size(); ++ci)
    if (std::includes(fan.maxCones[ci].begin(), fan.maxCones[ci].end(), face.begin(), face.end()))
      hosts.push_back(static_cast<int>(ci));
  if (hosts.empty()) throw Error("center is not a stratum");

  int c = static_cast<int>(face.size());
  int n = fan.rank;
  ToricPair out;
  out.fan.rank = n - c;
  out.label = pair.label + "/V(" + [&] {
    std::string s;
    for (size_t i = 0; i < face.size(); ++i) s += (i ? "," : "") + std::to_string(face[i]);
    return s;
  }() + ")";

  // Smith transform of the face rays: dropping the leading coordinates of
  // v * right projects along the face's saturated span
  MatZ faceRays;
  for (int i : face) faceRays.push_back(fan.rays[i]);
  MatZ right;
  if (c == 0) {
    right = identity_mat(n);
  } else {
    auto s = smith_normal_form(faceRays);
    if (static_cast<int>(s.diagonal.size()) < c) throw Error("center is not a stratum");
    for (const auto& x : s.diagonal)
      if (x == 0) throw Error("center is not a stratum");
    right = s.right;
  }
  auto project = [&](const VecZ& v) {
    VecZ out2(n - c);
    for (int j = c; j < n; ++j) {
      Int acc = 0;
      for (int k = 0; k < n; ++k) acc += v[k] * right[k][j];
      out2[j - c] = acc;
    }
    return out2;
  };

  std::map<VecZ, int> rayIdx;
  std::set<std::vector<int>> cones;
  for (int ci : hosts) {
    std::vector<int> cone;
    for (int ri : fan.maxCones[ci]) {
      if (std::binary_search(face.begin(), face.end(), ri)) continue;
      VecZ img = primitivize(project(fan.rays[ri]));
      auto it = rayIdx.find(img);
      int idx;
      if (it == rayIdx.end()) {
        idx = static_cast<int>(out.fan.rays.size());
        rayIdx.emplace(img, idx);
        out.fan.rays.push_back(img);
      } else {
        idx = it->second;
      }
      cone.push_back(idx);
    }
    std::sort(cone.begin(), cone.end());
    cones.insert(cone);
  }
  out.fan.maxCones.assign(cones.begin(), cones.end());
  return out;
}

struct SODPiece {
  std::string base;
  Int rank;
  int twistIndex;
};

struct RankEquation {
  Int hostRank;
  Int embeddedRank;
  std::vector<Int> pieceRanks;
};

struct SODReport {
  std::string caseLabel;  // A, B, C, MORI_FIBER, COEFF_CHANGE
  std::string hostSide;
  std::string embeddedSide;
  RankEquation rankEquation;
  std::vector<SODPiece> orthogonalPieces;
  std::string display;
};

namespace detail {

inline std::string sod_display(const SODReport& r, const std::string& pieceBase) {
  if (r.caseLabel == "B") return "D(" + r.hostSide + ") = Φ(D(" + r.embeddedSide + "))";
  std::string out = "D(" + r.hostSide + ") = ⟨";
  for (size_t i = 0; i < r.orthogonalPieces.size(); ++i) {
    if (i) out += ", ";
    out += "D(" + pieceBase + ")(" + std::to_string(r.orthogonalPieces[i].twistIndex) + ")";
  }
  if (!r.embeddedSide.empty()) {
    if (!r.orthogonalPieces.empty()) out += ", ";
    out += "Φ(D(" + r.embeddedSide + "))";
  }
  out += "⟩";
  return out;
}

inline void fill_pieces(SODReport& report, const std::string& base, const Int& pieceRank,
                        const Int& count) {
  for (Int i = 1; i <= count; ++i) {
    report.orthogonalPieces.push_back({base, pieceRank, static_cast<int>(i)});
    report.rankEquation.pieceRanks.push_back(pieceRank);
  }
}

// common assembly once the host/embedded sides and the filtration piece are known
inline SODReport assemble_two_sided(const ToricPair& host, const ToricPair& embedded,
                                    const std::string& caseLabel, const ToricPair& piecePair) {
  SODReport report;
  report.caseLabel = caseLabel;
  report.hostSide = host.label;
  report.embeddedSide = embedded.label;
  report.rankEquation.hostRank = categorical_rank(host);
  report.rankEquation.embeddedRank = categorical_rank(embedded);
  Int pieceRank = categorical_rank(piecePair);
  Int gap = report.rankEquation.hostRank - report.rankEquation.embeddedRank;
  if (caseLabel == "B") {
    if (gap != 0) throw Error("rank accounting inconsistent");
    report.display = sod_display(report, piecePair.label);
    return report;
  }
  if (gap <= 0 || pieceRank <= 0 || gap % pieceRank != 0)
    throw Error("rank accounting inconsistent");
  fill_pieces(report, piecePair.label, pieceRank, gap / pieceRank);
  report.display = sod_display(report, piecePair.label);
  return report;
}

}  // namespace detail

// decomposition bookkeeping for a single-ray divisorial contraction from the
// first pair onto the second
inline SODReport sod_divisorial(const ToricPair& pairX, const ToricPair& pairY) {
  require_valid(pairX);
  require_valid(pairY);
  std::set<VecZ> raysX(pairX.fan.rays.begin(), pairX.fan.rays.end());
  std::set<VecZ> raysY(pairY.fan.rays.begin(), pairY.fan.rays.end());
  std::vector<VecZ> extra;
  for (const auto& r : raysX)
    if (!raysY.count(r)) extra.push_back(r);
  for (const auto& r : raysY)
    if (!raysX.count(r)) throw Error("pairs are not related by a divisorial contraction");
  if (extra.size() != 1) throw Error("pairs are not related by a divisorial contraction");
  const VecZ& exceptional = extra[0];

  for (size_t i = 0; i < pairY.fan.rays.size(); ++i) {
    const VecZ& r = pairY.fan.rays[i];
    int xi = -1;
    for (size_t j = 0; j < pairX.fan.rays.size(); ++j)
      if (pairX.fan.rays[j] == r) xi = static_cast<int>(j);
    if (coefficient_of(pairY, static_cast<int>(i)) != coefficient_of(pairX, xi))
      throw Error("coefficients are not the push-forward");
  }

  auto comparison = k_compare(pairX, pairY);
  // the center: the face of the second fan whose relative interior holds the
  // exceptional direction
  std::vector<int> center;
  bool found = false;
  for (const auto& face : fan_faces(pairY.fan)) {
    if (face.empty()) continue;
    if (cone_relint_contains(cone_ray_vectors(pairY.fan, face), to_vecq(exceptional))) {
      center = face;
      found = true;
      break;
    }
  }
  if (!found) throw Error("pairs are not related by a divisorial contraction");
  ToricPair centerPair = orbit_closure_pair(pairY, center);

  switch (comparison.verdict) {
    case Verdict::EQUIVALENT:
      return detail::assemble_two_sided(pairX, pairY, "B", centerPair);
    case Verdict::FIRST_GE:
      return detail::assemble_two_sided(pairX, pairY, "A", centerPair);
    case Verdict::FIRST_LE: {
      auto report = detail::assemble_two_sided(pairY, pairX, "C", centerPair);
      return report;
    }
    default:
      throw Error("pairs are not comparable");
  }
}

// decomposition bookkeeping across a flipping wall of the first pair
inline SODReport sod_flip(const ToricPair& pairX, const ToricPair& pairY,
                          const std::vector<int>& wall) {
  require_valid(pairX);
  require_valid(pairY);
  ToricPair flipped = perform_flip(pairX, wall);
  if (!fan_equal(flipped.fan, pairY.fan) || flipped.coefficients != pairY.coefficients)
    throw Error("pairs are not related by the wall flip");

  // the contraction collapses the whole circuit star to a point of the target,
  // leaving a bare torus orbit of the complementary dimension
  WallReport report = wall_analysis(pairX, wall);
  std::vector<int> circuit = report.circuitRays;
  std::vector<VecZ> circuitRays;
  for (int i : circuit) circuitRays.push_back(pairX.fan.rays[i]);
  int d = cone_dim(circuitRays);
  ToricPair torus;
  torus.fan.rank = pairX.fan.rank - d;
  torus.fan.maxCones.push_back({});
  torus.label = "V(wall)";

  switch (k_compare(pairX, pairY).verdict) {
    case Verdict::EQUIVALENT:
      return detail::assemble_two_sided(pairX, pairY, "B", torus);
    case Verdict::FIRST_GE:
      return detail::assemble_two_sided(pairX, pairY, "A", torus);
    case Verdict::FIRST_LE:
      return detail::assemble_two_sided(pairY, pairX, "A", torus);
    default:
      throw Error("pairs are not comparable");
  }
}

// decomposition bookkeeping for lowering one standard coefficient; the first
// pair carries the larger coefficient
inline SODReport sod_coefficient_change(const ToricPair& pairB, const ToricPair& pairC) {
  require_valid(pairB);
  require_valid(pairC);
  if (!fan_equal(pairB.fan, pairC.fan))
    throw Error("pairs do not differ by a single coefficient");
  if (!standard_coefficients_check(pairB) || !standard_coefficients_check(pairC))
    throw Error("categorical rank requires standard coefficients");

  std::vector<int> changed;
  for (size_t i = 0; i < pairB.fan.rays.size(); ++i)
    if (coefficient_of(pairB, static_cast<int>(i)) != coefficient_of(pairC, static_cast<int>(i)))
      changed.push_back(static_cast<int>(i));
  if (changed.size() != 1) throw Error("pairs do not differ by a single coefficient");
  int ray = changed[0];
  if (coefficient_of(pairB, ray) < coefficient_of(pairC, ray))
    throw Error("first pair must carry the larger coefficient");

  ToricPair divisorPair = orbit_closure_pair(pairB, {ray});
  auto report = detail::assemble_two_sided(pairB, pairC, "COEFF_CHANGE", divisorPair);
  return report;
}

// decomposition bookkeeping for a toric fiber-type projection given by a
// surjective lattice map sending the first fan onto the second
inline SODReport sod_mori_fiber(const ToricPair& pairX, const MatZ& projection,
                                const ToricPair& pairY) {
  require_valid(pairX);
  require_valid(pairY);
  int m = pairY.fan.rank;
  int n = pairX.fan.rank;
  if (static_cast<int>(projection.size()) != m)
    throw Error("projection does not present the first fan over the second");
  for (const auto& row : projection)
    if (static_cast<int>(row.size()) != n)
      throw Error("projection does not present the first fan over the second");
  if (m > 0) {
    auto s = smith_normal_form(projection);
    if (static_cast<int>(s.diagonal.size()) < m)
      throw Error("projection does not present the first fan over the second");
    for (const auto& x : s.diagonal)
      if (x != 1) throw Error("projection does not present the first fan over the second");
  }

  auto apply = [&](const VecZ& v) {
    VecZ out(m, Int(0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) out[i] += projection[i][j] * v[j];
    return out;
  };

  // every source cone must map onto a cone of the target fan, and every
  // target cone must be such an image
  std::vector<bool> hit(pairY.fan.maxCones.size(), false);
  for (const auto& cone : pairX.fan.maxCones) {
    std::vector<VecZ> image;
    for (int ri : cone) {
      VecZ img = apply(pairX.fan.rays[ri]);
      if (!is_zero_vec(img)) image.push_back(primitivize(img));
    }
    bool matched = false;
    for (size_t ti = 0; ti < pairY.fan.maxCones.size(); ++ti) {
      auto targetRays = cone_ray_vectors(pairY.fan, pairY.fan.maxCones[ti]);
      bool fwd = true, bwd = true;
      for (const auto& r : image) fwd = fwd && cone_contains(targetRays, to_vecq(r));
      for (const auto& r : targetRays) bwd = bwd && cone_contains_hull(image, to_vecq(r), m);
      if (fwd && bwd) {
        matched = true;
        hit[ti] = true;
        break;
      }
    }
    if (!matched) throw Error("projection does not present the first fan over the second");
  }
  for (bool h : hit)
    if (!h) throw Error("projection does not present the first fan over the second");

  SODReport report;
  report.caseLabel = "MORI_FIBER";
  report.hostSide = pairX.label;
  report.embeddedSide = "";
  report.rankEquation.hostRank = categorical_rank(pairX);
  report.rankEquation.embeddedRank = 0;
  Int base = categorical_rank(pairY);
  if (base <= 0 || report.rankEquation.hostRank % base != 0)
    throw Error("rank accounting inconsistent");
  detail::fill_pieces(report, pairY.label, base,
                      report.rankEquation.hostRank / base);
  report.display = detail::sod_display(report, pairY.label);
  return report;
}

}  // namespace kfan
