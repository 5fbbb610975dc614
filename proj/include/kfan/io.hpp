#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "refine.hpp"
#include "sod.hpp"
#include "wall.hpp"

namespace kfan {

using Json = nlohmann::json;

inline long long to_ll(const Int& x) { return x.convert_to<long long>(); }

inline Json vec_to_json(const VecZ& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_ll(x));
  return arr;
}

inline VecZ vec_from_json(const Json& j) {
  if (!j.is_array()) throw Error("ray must be an array of integers");
  VecZ out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("ray must be an array of integers");
    out.push_back(Int(x.get<long long>()));
  }
  return out;
}

inline Json pair_to_json(const ToricPair& pair) {
  Json j;
  j["rank"] = pair.fan.rank;
  Json rays = Json::array();
  for (const auto& r : pair.fan.rays) rays.push_back(vec_to_json(r));
  j["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : pair.fan.maxCones) cones.push_back(c);
  j["cones"] = cones;
  Json boundary = Json::object();
  for (const auto& [idx, b] : pair.coefficients) boundary[std::to_string(idx)] = rat_to_string(b);
  j["boundary"] = boundary;
  j["label"] = pair.label;
  return j;
}

inline ToricPair pair_from_json(const Json& j) {
  if (!j.is_object()) throw Error("pair file must be a JSON object");
  for (const char* key : {"rank", "rays", "cones"})
    if (!j.contains(key)) throw Error(std::string("pair file is missing \"") + key + "\"");
  ToricPair out;
  if (!j["rank"].is_number_integer()) throw Error("\"rank\" must be an integer");
  out.fan.rank = j["rank"].get<int>();
  if (!j["rays"].is_array()) throw Error("\"rays\" must be an array");
  for (const auto& r : j["rays"]) out.fan.rays.push_back(vec_from_json(r));
  if (!j["cones"].is_array()) throw Error("\"cones\" must be an array");
  for (const auto& c : j["cones"]) {
    if (!c.is_array()) throw Error("\"cones\" entries must be arrays of ray indices");
    std::vector<int> cone;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw Error("\"cones\" entries must be arrays of ray indices");
      cone.push_back(x.get<int>());
    }
    std::sort(cone.begin(), cone.end());
    out.fan.maxCones.push_back(std::move(cone));
  }
  std::sort(out.fan.maxCones.begin(), out.fan.maxCones.end());
  if (j.contains("boundary")) {
    if (!j["boundary"].is_object()) throw Error("\"boundary\" must be an object");
    for (const auto& [key, value] : j["boundary"].items()) {
      size_t pos = 0;
      int idx;
      try {
        idx = std::stoi(key, &pos);
      } catch (const std::exception&) {
        throw Error("boundary key is not a ray index: \"" + key + "\"");
      }
      if (pos != key.size()) throw Error("boundary key is not a ray index: \"" + key + "\"");
      if (!value.is_string()) throw Error("boundary values must be rational strings");
      out.coefficients[idx] = parse_rational(value.get<std::string>());
    }
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw Error("\"label\" must be a string");
    out.label = j["label"].get<std::string>();
  }
  return out;
}

inline std::string pair_to_text(const ToricPair& pair) { return pair_to_json(pair).dump(2) + "\n"; }

inline ToricPair pair_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("cannot parse pair file: ") + e.what());
  }
  return pair_from_json(j);
}

inline void write_pair_file(const std::string& path, const ToricPair& pair) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << pair_to_text(pair);
}

inline ToricPair read_pair_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return pair_from_text(buf.str());
}

inline Json fan_to_json(const Fan& fan) {
  Json j;
  j["rank"] = fan.rank;
  Json rays = Json::array();
  for (const auto& r : fan.rays) rays.push_back(vec_to_json(r));
  j["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : fan.maxCones) cones.push_back(c);
  j["cones"] = cones;
  return j;
}

inline Json kcomparison_to_json(const KComparison& k) {
  Json j;
  j["verdict"] = verdict_name(k.verdict);
  j["refinement"] = fan_to_json(k.refinement);
  Json diffs = Json::array();
  for (const auto& [ray, d] : k.perRayDifference) {
    Json entry;
    entry["ray"] = vec_to_json(ray);
    entry["difference"] = rat_to_string(d);
    diffs.push_back(entry);
  }
  j["perRayDifference"] = diffs;
  return j;
}

inline Json wall_report_to_json(const WallReport& r) {
  Json j;
  j["wall"] = r.wall;
  j["adjacentRays"] = {r.adjacentRays[0], r.adjacentRays[1]};
  j["circuitRays"] = r.circuitRays;
  Json rel = Json::array();
  for (const auto& x : r.relation) rel.push_back(to_ll(x));
  j["relation"] = rel;
  j["kDegree"] = rat_to_string(r.kDegree);
  j["classification"] = wall_class_name(r.classification);
  j["kSign"] = k_sign_name(r.kSign);
  return j;
}

inline Json sod_report_to_json(const SODReport& r) {
  Json j;
  j["caseLabel"] = r.caseLabel;
  j["hostSide"] = r.hostSide;
  j["embeddedSide"] = r.embeddedSide;
  Json eq;
  eq["hostRank"] = to_ll(r.rankEquation.hostRank);
  eq["embeddedRank"] = to_ll(r.rankEquation.embeddedRank);
  Json ranks = Json::array();
  for (const auto& x : r.rankEquation.pieceRanks) ranks.push_back(to_ll(x));
  eq["pieceRanks"] = ranks;
  j["rankEquation"] = eq;
  Json pieces = Json::array();
  for (const auto& p : r.orthogonalPieces) {
    Json piece;
    piece["base"] = p.base;
    piece["rank"] = to_ll(p.rank);
    piece["twistIndex"] = p.twistIndex;
    pieces.push_back(piece);
  }
  j["orthogonalPieces"] = pieces;
  j["display"] = r.display;
  return j;
}

inline Json witnesses_to_json(const std::vector<DiscrepancyWitness>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) {
    Json entry;
    entry["point"] = vec_to_json(w.point);
    entry["logDiscrepancy"] = rat_to_string(w.logDiscrepancy);
    arr.push_back(entry);
  }
  return arr;
}

inline std::string error_text(const std::string& message) {
  Json j;
  j["error"] = message;
  return j.dump(2) + "\n";
}

}  // namespace kfan
