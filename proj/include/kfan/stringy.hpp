#pragma once

#include "groth.hpp"
#include "refine.hpp"

namespace kfan {

// class of the toric variety in the localized ring: one torus factor
// (L-1)^(rank - dim) per face of the fan
inline GrothClass class_of_fan(const Fan& fan) {
  Poly acc;
  Poly lMinusOne = {Int(-1), Int(1)};
  for (const auto& face : fan_faces(fan))
    acc = poly_add(acc, poly_pow(lMinusOne, fan.rank - static_cast<int>(face.size())));
  return groth_from_poly(acc);
}

// rays explicitly carried by the pair, whether or not the value is zero
inline std::vector<int> explicit_rays(const ToricPair& pair) {
  std::vector<int> out;
  for (const auto& [idx, b] : pair.coefficients) out.push_back(idx);
  return out;
}

inline void require_smooth_for_strata(const ToricPair& pair) {
  if (!fan_is_smooth(pair.fan))
    throw Error("stringy strata require a smooth model; call resolve first");
}

// class of the locally closed stratum lying on exactly the carried rays in J
inline GrothClass strata_class(const ToricPair& pair, std::vector<int> J) {
  require_smooth_for_strata(pair);
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  std::vector<int> ex = explicit_rays(pair);
  std::set<int> carried(ex.begin(), ex.end());
  for (int j : J)
    if (!carried.count(j)) throw Error("stratum index is not a carried ray");

  Poly acc;
  Poly lMinusOne = {Int(-1), Int(1)};
  for (const auto& face : fan_faces(pair.fan)) {
    std::vector<int> met;
    for (int i : face)
      if (carried.count(i)) met.push_back(i);
    if (met == J)
      acc = poly_add(acc, poly_pow(lMinusOne, pair.fan.rank - static_cast<int>(face.size())));
  }
  return groth_from_poly(acc);
}

// stringy class: sum over subsets J of carried rays of the J-stratum class
// times one geometric-series correction factor per ray in J; faces realize
// only a few subsets, so the sum is grouped by realized subset
inline GrothClass stringy_invariant(const ToricPair& pair,
                                    ResolveStrategy strategy = ResolveStrategy::MinPhi) {
  require_valid(pair);
  if (!fan_is_smooth(pair.fan)) {
    auto res = resolve(pair, strategy);
    return stringy_invariant(res.pair, strategy);
  }

  std::vector<int> ex = explicit_rays(pair);
  std::set<int> carried(ex.begin(), ex.end());
  Int rootInt = 1;
  for (int j : carried) rootInt = ilcm(rootInt, rat_den(Rat(1) - coefficient_of(pair, j)));
  long long root = static_cast<long long>(rootInt);

  std::map<std::vector<int>, Poly> strata;  // realized subset -> class in L
  Poly lMinusOne = {Int(-1), Int(1)};
  for (const auto& face : fan_faces(pair.fan)) {
    std::vector<int> met;
    for (int i : face)
      if (carried.count(i)) met.push_back(i);
    Poly piece = poly_pow(lMinusOne, pair.fan.rank - static_cast<int>(face.size()));
    auto it = strata.find(met);
    if (it == strata.end())
      strata.emplace(std::move(met), std::move(piece));
    else
      it->second = poly_add(it->second, piece);
  }

  GrothClass acc = groth_zero();
  for (const auto& [met, piece] : strata) {
    Poly num = poly_stretch(piece, root);
    Poly den = poly_const(1);
    for (int j : met) {
      Rat exponent = (Rat(1) - coefficient_of(pair, j)) * Rat(rootInt);
      if (rat_den(exponent) != 1 || exponent <= 0)
        throw Error("internal: non-integral exponent in stringy factor");
      long long e = static_cast<long long>(rat_num(exponent));
      Poly factorNum = poly_sub(poly_monomial(1, static_cast<int>(root)), poly_const(1));
      Poly factorDen = poly_sub(poly_monomial(1, static_cast<int>(e)), poly_const(1));
      num = poly_mul(num, factorNum);
      den = poly_mul(den, factorDen);
    }
    acc = groth_add(acc, groth_fraction(root, std::move(num), std::move(den)));
  }
  return acc;
}

}  // namespace kfan
