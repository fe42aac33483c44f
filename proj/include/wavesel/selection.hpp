#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavesel/error.hpp"
#include "wavesel/gridmap.hpp"
#include "wavesel/wavefront.hpp"

namespace wavesel {

enum class Robot { RoboticLizard, Biped, RoboticSnake, Quadruped, HalfHumanoid };

inline constexpr std::array<Robot, 5> kAllRobots = {Robot::RoboticLizard, Robot::Biped,
                                                    Robot::RoboticSnake, Robot::Quadruped,
                                                    Robot::HalfHumanoid};

constexpr std::string_view to_string(Robot r) noexcept {
  switch (r) {
    case Robot::RoboticLizard: return "RoboticLizard";
    case Robot::Biped: return "Biped";
    case Robot::RoboticSnake: return "RoboticSnake";
    case Robot::Quadruped: return "Quadruped";
    case Robot::HalfHumanoid: return "HalfHumanoid";
  }
  return "?";
}

inline std::optional<Robot> robot_from_string(std::string_view s) {
  for (Robot r : kAllRobots)
    if (to_string(r) == s) return r;
  return std::nullopt;
}

/// 1 is the most demanding terrain:
/// Wall > Stairs > Clutter > Slope > Flat.
constexpr int terrain_priority(TerrainClass t) noexcept {
  switch (t) {
    case TerrainClass::Wall: return 1;
    case TerrainClass::Stairs: return 2;
    case TerrainClass::Clutter: return 3;
    case TerrainClass::Slope: return 4;
    case TerrainClass::Flat: return 5;
  }
  return 0;
}

/// 1 is the most capable robot:
/// RoboticLizard > Biped > RoboticSnake > Quadruped > HalfHumanoid.
constexpr int robot_priority(Robot r) noexcept {
  switch (r) {
    case Robot::RoboticLizard: return 1;
    case Robot::Biped: return 2;
    case Robot::RoboticSnake: return 3;
    case Robot::Quadruped: return 4;
    case Robot::HalfHumanoid: return 5;
  }
  return 0;
}

/// The robot that handles each terrain class.
constexpr Robot robot_for_terrain(TerrainClass t) noexcept {
  switch (t) {
    case TerrainClass::Wall: return Robot::RoboticLizard;
    case TerrainClass::Stairs: return Robot::Biped;
    case TerrainClass::Clutter: return Robot::RoboticSnake;
    case TerrainClass::Slope: return Robot::Quadruped;
    case TerrainClass::Flat: return Robot::HalfHumanoid;
  }
  return Robot::HalfHumanoid;
}

/// Orders terrains by priority rank (most demanding first).
struct TerrainPriorityLess {
  constexpr bool operator()(TerrainClass a, TerrainClass b) const noexcept {
    return terrain_priority(a) < terrain_priority(b);
  }
};

using TerrainSet = std::set<TerrainClass, TerrainPriorityLess>;

struct TerrainProfile {
  std::vector<TerrainClass> sequence;  // one per path cell
  TerrainSet present;

  friend bool operator==(const TerrainProfile&, const TerrainProfile&) = default;
};

inline TerrainProfile terrain_profile(const GridMap& map, const Path& path) {
  TerrainProfile profile;
  profile.sequence.reserve(path.coords.size());
  for (const Coord& c : path.coords) {
    const auto terrain = map.at(c).terrain();
    if (!terrain)
      throw Error(ErrorCode::PathCellIsObstacle, "path cell " + to_string(c) + " is an obstacle");
    profile.sequence.push_back(*terrain);
    profile.present.insert(*terrain);
  }
  return profile;
}

/// Robot of the highest-priority terrain among `terrains`. Duplicates and
/// ordering are irrelevant. A wall anywhere means the lizard.
inline Robot select_robot(std::span<const TerrainClass> terrains) {
  if (terrains.empty()) throw Error(ErrorCode::EmptyTerrainSet, "no terrain to select from");
  TerrainClass governing = terrains.front();
  for (TerrainClass t : terrains)
    if (terrain_priority(t) < terrain_priority(governing)) governing = t;
  return robot_for_terrain(governing);
}

inline Robot select_robot(const TerrainSet& present) {
  const std::vector<TerrainClass> terrains(present.begin(), present.end());
  return select_robot(std::span<const TerrainClass>(terrains));
}

inline Robot select_robot(std::initializer_list<TerrainClass> terrains) {
  return select_robot(std::span<const TerrainClass>(terrains.begin(), terrains.size()));
}

struct Segment {
  Path subpath;
  TerrainClass terrain;
  Robot robot;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Splits `path` into maximal runs of equal terrain. The last cell of a run
/// is the handoff cell: it belongs to that run's segment and is repeated as
/// the first cell of the next segment's subpath.
inline std::vector<Segment> segment_plan(const GridMap& map, const Path& path) {
  const TerrainProfile profile = terrain_profile(map, path);
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < path.coords.size(); ++i) {
    const TerrainClass t = profile.sequence[i];
    if (segments.empty() || segments.back().terrain != t) {
      segments.push_back(Segment{Path{}, t, robot_for_terrain(t)});
      if (i > 0) segments.back().subpath.coords.push_back(path.coords[i - 1]);
    }
    segments.back().subpath.coords.push_back(path.coords[i]);
  }
  return segments;
}

enum class Mode { Single, Segmented };

constexpr std::string_view to_string(Mode m) noexcept {
  return m == Mode::Single ? "single" : "segmented";
}

/// A planned mission: the path, its terrain, and the robot assignment.
struct Plan {
  Path path;
  TerrainProfile profile;
  Mode mode = Mode::Single;
  std::optional<Robot> robot;     // Single mode
  std::vector<Segment> segments;  // Segmented mode

  std::size_t length() const noexcept { return path.length(); }

  friend bool operator==(const Plan&, const Plan&) = default;
};

inline Plan make_plan(const GridMap& map, Path path, Mode mode = Mode::Single) {
  if (path.empty()) throw Error(ErrorCode::EmptyPath, "cannot assign a robot to an empty path");
  Plan plan;
  plan.profile = terrain_profile(map, path);
  plan.mode = mode;
  if (mode == Mode::Single)
    plan.robot = select_robot(plan.profile.present);
  else
    plan.segments = segment_plan(map, path);
  plan.path = std::move(path);
  return plan;
}

/// Checks every structural invariant of `plan` against `map`. Returns one
/// message per violation; empty means valid.
inline std::vector<std::string> validate_plan(const GridMap& map, const Plan& plan,
                                              Connectivity connectivity) {
  std::vector<std::string> problems;
  const auto& coords = plan.path.coords;
  if (coords.empty()) {
    problems.push_back("path is empty");
    return problems;
  }

  std::set<Coord> seen;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!map.in_bounds(coords[i])) {
      problems.push_back("path cell " + to_string(coords[i]) + " out of bounds");
      return problems;
    }
    if (map.at(coords[i]).is_obstacle())
      problems.push_back("path cell " + to_string(coords[i]) + " is an obstacle");
    if (!seen.insert(coords[i]).second)
      problems.push_back("path cell " + to_string(coords[i]) + " repeats");
    if (i > 0 && !adjacent(coords[i - 1], coords[i], connectivity))
      problems.push_back("cells " + to_string(coords[i - 1]) + " and " + to_string(coords[i]) +
                         " are not adjacent");
  }
  if (!problems.empty()) return problems;

  const TerrainProfile expected = terrain_profile(map, plan.path);
  if (plan.profile.sequence != expected.sequence)
    problems.push_back("terrain sequence does not match the map");
  if (plan.profile.present != expected.present)
    problems.push_back("terrain set does not match the terrain sequence");

  if (plan.mode == Mode::Single) {
    if (!plan.robot)
      problems.push_back("single-mode plan has no robot");
    else if (*plan.robot != select_robot(expected.present))
      problems.push_back("robot " + std::string(to_string(*plan.robot)) +
                         " does not match the terrain set");
    if (!plan.segments.empty()) problems.push_back("single-mode plan carries segments");
  } else {
    if (plan.segments.empty()) problems.push_back("segmented plan has no segments");
    std::vector<Coord> joined;
    for (std::size_t s = 0; s < plan.segments.size(); ++s) {
      const Segment& seg = plan.segments[s];
      if (seg.robot != robot_for_terrain(seg.terrain))
        problems.push_back("segment " + std::to_string(s) + " robot does not match its terrain");
      if (s > 0 && plan.segments[s - 1].terrain == seg.terrain)
        problems.push_back("segments " + std::to_string(s - 1) + " and " + std::to_string(s) +
                           " share a terrain");
      const auto& sub = seg.subpath.coords;
      if (sub.empty()) {
        problems.push_back("segment " + std::to_string(s) + " is empty");
        continue;
      }
      // After the leading handoff cell (all but the first segment), every
      // cell carries the segment's terrain.
      const std::size_t first_own = s > 0 ? 1 : 0;
      if (s > 0 && !joined.empty() && sub.front() != joined.back())
        problems.push_back("segment " + std::to_string(s) +
                           " does not start on the previous segment's last cell");
      if (sub.size() <= first_own)
        problems.push_back("segment " + std::to_string(s) + " has no own cells");
      for (std::size_t i = first_own; i < sub.size(); ++i)
        if (!map.in_bounds(sub[i]) || map.at(sub[i]).terrain() != seg.terrain)
          problems.push_back("segment " + std::to_string(s) + " cell " + to_string(sub[i]) +
                             " has a different terrain");
      joined.insert(joined.end(), sub.begin() + static_cast<std::ptrdiff_t>(first_own),
                    sub.end());
    }
    if (joined != coords) problems.push_back("segments do not reproduce the path");
    if (plan.robot) problems.push_back("segmented plan carries a single robot");
  }
  return problems;
}

}  // namespace wavesel
