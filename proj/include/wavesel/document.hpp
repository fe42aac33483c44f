#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavesel/gridmap.hpp"
#include "wavesel/selection.hpp"
#include "wavesel/wavefront.hpp"

// JSON plan documents.
//
//   {
//     "schema_version": 1,
//     "status": "ok" | "no_path",
//     "map": {"width": W, "height": H},
//     "start": [r, c], "goal": [r, c],
//     "connectivity": 4 | 8,
//     "mode": "single" | "segmented",
//     "path": [[r, c], ...],                      (ok only)
//     "length": N,                                (ok only)
//     "terrain": {"sequence": [...], "present": [...]},   (ok only)
//     "robot": "RoboticLizard",                   (ok, single)
//     "segments": [{"cells": [...], "terrain": "Wall",
//                   "robot": "RoboticLizard"}]    (ok, segmented)
//     "reason": "..."                             (no_path only)
//   }
//
// "present" lists terrains most demanding first.

namespace wavesel {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct MissionHeader {
  std::size_t width = 0;
  std::size_t height = 0;
  Coord start;
  Coord goal;
  Connectivity connectivity = Connectivity::Four;
  Mode mode = Mode::Single;
};

namespace detail {

[[noreturn]] inline void bad_document(const std::string& what) {
  throw Error(ErrorCode::MalformedDocument, what);
}

inline Json coord_json(const Coord& c) { return Json::array({c.row, c.col}); }

inline Json coords_json(const std::vector<Coord>& coords) {
  Json out = Json::array();
  for (const Coord& c : coords) out.push_back(coord_json(c));
  return out;
}

inline Coord coord_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
    bad_document("coordinate must be [row, col]");
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

inline std::vector<Coord> coords_from(const Json& j) {
  std::vector<Coord> out;
  for (const auto& c : j) out.push_back(coord_from(c));
  return out;
}

inline TerrainClass terrain_from(const Json& j) {
  const auto t = terrain_from_string(j.get<std::string>());
  if (!t) bad_document("unknown terrain " + j.dump());
  return *t;
}

inline Robot robot_from(const Json& j) {
  const auto r = robot_from_string(j.get<std::string>());
  if (!r) bad_document("unknown robot " + j.dump());
  return *r;
}

inline Json header_json(const MissionHeader& h, std::string_view status) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["status"] = std::string(status);
  doc["map"] = {{"width", h.width}, {"height", h.height}};
  doc["start"] = coord_json(h.start);
  doc["goal"] = coord_json(h.goal);
  doc["connectivity"] = static_cast<int>(h.connectivity);
  doc["mode"] = std::string(to_string(h.mode));
  return doc;
}

}  // namespace detail

inline Json plan_document(const MissionHeader& header, const Plan& plan) {
  Json doc = detail::header_json(header, "ok");
  doc["path"] = detail::coords_json(plan.path.coords);
  doc["length"] = plan.length();

  Json sequence = Json::array();
  for (TerrainClass t : plan.profile.sequence) sequence.push_back(std::string(to_string(t)));
  Json present = Json::array();
  for (TerrainClass t : plan.profile.present) present.push_back(std::string(to_string(t)));
  doc["terrain"] = {{"sequence", std::move(sequence)}, {"present", std::move(present)}};

  if (plan.mode == Mode::Single) {
    doc["robot"] = std::string(to_string(*plan.robot));
  } else {
    Json segments = Json::array();
    for (const Segment& s : plan.segments) {
      Json seg;
      seg["cells"] = detail::coords_json(s.subpath.coords);
      seg["terrain"] = std::string(to_string(s.terrain));
      seg["robot"] = std::string(to_string(s.robot));
      segments.push_back(std::move(seg));
    }
    doc["segments"] = std::move(segments);
  }
  return doc;
}

inline Json no_path_document(const MissionHeader& header, const std::string& reason) {
  Json doc = detail::header_json(header, "no_path");
  doc["reason"] = reason;
  return doc;
}

/// Reads the header fields of any plan document. Throws MalformedDocument
/// (or a nlohmann::json exception for missing keys and wrong types).
inline MissionHeader header_from_document(const Json& doc) {
  using detail::bad_document;
  if (doc.at("schema_version").get<int>() != kSchemaVersion)
    bad_document("unsupported schema_version");
  MissionHeader h;
  h.width = doc.at("map").at("width").get<std::size_t>();
  h.height = doc.at("map").at("height").get<std::size_t>();
  h.start = detail::coord_from(doc.at("start"));
  h.goal = detail::coord_from(doc.at("goal"));
  const int conn = doc.at("connectivity").get<int>();
  if (conn != 4 && conn != 8)
    bad_document("connectivity must be 4 or 8");
  h.connectivity = static_cast<Connectivity>(conn);
  const auto mode = doc.at("mode").get<std::string>();
  if (mode != "single" && mode != "segmented")
    bad_document("unknown mode " + mode);
  h.mode = mode == "single" ? Mode::Single : Mode::Segmented;
  return h;
}

/// Rebuilds the Plan stored in an "ok" document, without checking it
/// against a map. Pair with validate_document().
inline Plan plan_from_document(const Json& doc) {
  using detail::bad_document;
  if (doc.at("status").get<std::string>() != "ok")
    bad_document("document carries no plan");
  const MissionHeader h = header_from_document(doc);
  Plan plan;
  plan.mode = h.mode;
  plan.path.coords = detail::coords_from(doc.at("path"));
  for (const auto& t : doc.at("terrain").at("sequence"))
    plan.profile.sequence.push_back(detail::terrain_from(t));
  for (const auto& t : doc.at("terrain").at("present"))
    plan.profile.present.insert(detail::terrain_from(t));
  if (h.mode == Mode::Single) {
    plan.robot = detail::robot_from(doc.at("robot"));
  } else {
    for (const auto& s : doc.at("segments"))
      plan.segments.push_back(Segment{Path{detail::coords_from(s.at("cells"))},
                                      detail::terrain_from(s.at("terrain")),
                                      detail::robot_from(s.at("robot"))});
  }
  return plan;
}

/// Re-reads an "ok" document and checks it against `map`: header matches,
/// path runs start to goal, and every Plan invariant holds. Returns one
/// message per violation.
inline std::vector<std::string> validate_document(const Json& doc, const GridMap& map) {
  std::vector<std::string> problems;
  try {
    const MissionHeader h = header_from_document(doc);
    const Plan plan = plan_from_document(doc);
    if (h.width != map.width() || h.height != map.height())
      problems.push_back("map dimensions differ");
    if (plan.path.empty() || plan.path.coords.front() != h.start)
      problems.push_back("path does not begin at start");
    if (plan.path.empty() || plan.path.coords.back() != h.goal)
      problems.push_back("path does not end at goal");
    if (doc.at("length").get<std::size_t>() != plan.length())
      problems.push_back("length does not match path");
    for (auto& p : validate_plan(map, plan, h.connectivity)) problems.push_back(std::move(p));
  } catch (const nlohmann::json::exception& e) {
    problems.push_back(std::string("malformed document: ") + e.what());
  } catch (const Error& e) {
    problems.push_back(std::string("malformed document: ") + e.what());
  }
  return problems;
}

}  // namespace wavesel
