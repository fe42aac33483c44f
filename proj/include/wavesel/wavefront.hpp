#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "wavesel/error.hpp"
#include "wavesel/gridmap.hpp"

namespace wavesel {

/// Per-cell wave values from a goal-outward expansion.
///
///   0    traversable but never reached
///   1    obstacle
///   2    goal
///   v>2  reached after v-2 steps
class ValueField {
 public:
  using value_type = std::uint32_t;

  static constexpr value_type kUnreached = 0;
  static constexpr value_type kObstacle = 1;
  static constexpr value_type kGoal = 2;

  ValueField(std::size_t width, std::size_t height, std::vector<value_type> values)
      : width_(width), height_(height), values_(std::move(values)) {
    if (values_.size() != width_ * height_)
      throw Error(ErrorCode::FieldMismatch, "value count does not match field dimensions");
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  const std::vector<value_type>& values() const noexcept { return values_; }

  value_type at(const Coord& c) const {
    if (c.row >= height_ || c.col >= width_)
      throw Error(ErrorCode::OutOfBounds, "coordinate " + to_string(c) + " outside field");
    return values_[c.row * width_ + c.col];
  }

  bool reached(const Coord& c) const { return at(c) >= kGoal; }

  /// Step distance to the goal for a reached cell.
  std::optional<std::size_t> distance(const Coord& c) const {
    const value_type v = at(c);
    if (v < kGoal) return std::nullopt;
    return static_cast<std::size_t>(v - kGoal);
  }

  value_type max_value() const noexcept {
    value_type best = 0;
    for (value_type v : values_) best = v > best ? v : best;
    return best;
  }

  friend bool operator==(const ValueField&, const ValueField&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<value_type> values_;
};

/// Ordered cells from start (front) to goal (back).
struct Path {
  std::vector<Coord> coords;

  /// Edge count.
  std::size_t length() const noexcept { return coords.empty() ? 0 : coords.size() - 1; }
  bool empty() const noexcept { return coords.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Breadth-first wave from `goal`. Every reachable traversable cell ends up
/// holding its step distance to the goal plus two.
inline ValueField expand(const GridMap& map, const Coord& goal,
                         Connectivity connectivity = Connectivity::Four) {
  if (!map.in_bounds(goal))
    throw Error(ErrorCode::GoalOutOfBounds, "goal " + to_string(goal) + " outside map");
  if (map.at(goal).is_obstacle())
    throw Error(ErrorCode::GoalOnObstacle, "goal " + to_string(goal) + " is an obstacle");

  std::vector<ValueField::value_type> values(map.size(), ValueField::kUnreached);
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map.cells()[i].is_obstacle()) values[i] = ValueField::kObstacle;

  std::deque<Coord> frontier;
  values[map.index(goal)] = ValueField::kGoal;
  frontier.push_back(goal);

  std::vector<Coord> adjacent_cells;
  while (!frontier.empty()) {
    const Coord current = frontier.front();
    frontier.pop_front();
    const auto next_value = values[map.index(current)] + 1;
    neighbors_into(map, current, connectivity, adjacent_cells);
    for (const Coord& n : adjacent_cells) {
      auto& v = values[map.index(n)];
      if (v != ValueField::kUnreached) continue;
      v = next_value;
      frontier.push_back(n);
    }
  }
  return ValueField(map.width(), map.height(), std::move(values));
}

/// Greedy descent over `field` from `start` to the goal. At each cell the
/// first neighbor (fixed N, E, S, W[, NE, SE, SW, NW] order) holding
/// exactly one less is taken.
inline Path extract_path(const ValueField& field, const GridMap& map, const Coord& start,
                         Connectivity connectivity = Connectivity::Four) {
  if (field.width() != map.width() || field.height() != map.height())
    throw Error(ErrorCode::FieldMismatch, "field dimensions differ from map");
  if (!map.in_bounds(start))
    throw Error(ErrorCode::StartOutOfBounds, "start " + to_string(start) + " outside map");
  if (map.at(start).is_obstacle())
    throw Error(ErrorCode::StartOnObstacle, "start " + to_string(start) + " is an obstacle");
  if (!field.reached(start))
    throw Error(ErrorCode::StartUnreachable,
                "start " + to_string(start) + " is not reached by the wave");

  Path path;
  path.coords.reserve(field.at(start) - ValueField::kGoal + 1);
  path.coords.push_back(start);

  Coord current = start;
  std::vector<Coord> adjacent_cells;
  while (field.at(current) != ValueField::kGoal) {
    const auto want = field.at(current) - 1;
    neighbors_into(map, current, connectivity, adjacent_cells);
    const Coord* step = nullptr;
    for (const Coord& n : adjacent_cells) {
      if (field.at(n) == want) {
        step = &n;
        break;
      }
    }
    if (step == nullptr)
      throw Error(ErrorCode::FieldMismatch, "no descending neighbor at " + to_string(current) +
                                                "; field was built with another map or connectivity");
    current = *step;
    path.coords.push_back(current);
  }
  return path;
}

/// Shortest path from start to goal: expand from the goal, then descend.
/// `start == goal` yields the single-cell path.
inline Path plan_path(const GridMap& map, const Coord& start, const Coord& goal,
                      Connectivity connectivity = Connectivity::Four) {
  if (!map.in_bounds(start))
    throw Error(ErrorCode::StartOutOfBounds, "start " + to_string(start) + " outside map");
  if (map.at(start).is_obstacle())
    throw Error(ErrorCode::StartOnObstacle, "start " + to_string(start) + " is an obstacle");

  const ValueField field = expand(map, goal, connectivity);
  if (!field.reached(start))
    throw Error(ErrorCode::NoPath,
                "no path from " + to_string(start) + " to " + to_string(goal));
  return extract_path(field, map, start, connectivity);
}

/// Plain forward BFS from `a` with a visited set; shares nothing with
/// expand() so the two can check each other. nullopt means unreachable.
inline std::optional<std::size_t> bfs_distance_oracle(const GridMap& map, const Coord& a,
                                                      const Coord& b,
                                                      Connectivity connectivity =
                                                          Connectivity::Four) {
  for (const Coord& c : {a, b}) {
    if (!map.in_bounds(c))
      throw Error(ErrorCode::OutOfBounds, "endpoint " + to_string(c) + " outside map");
    if (map.at(c).is_obstacle())
      throw Error(ErrorCode::PathCellIsObstacle, "endpoint " + to_string(c) + " is an obstacle");
  }
  if (a == b) return 0;

  const auto h = static_cast<long>(map.height());
  const auto w = static_cast<long>(map.width());
  const long diag = connectivity == Connectivity::Eight ? 1 : 0;

  std::vector<bool> visited(map.size(), false);
  std::vector<std::pair<Coord, std::size_t>> queue;
  queue.push_back({a, 0});
  visited[map.index(a)] = true;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [cell, dist] = queue[head];
    for (long dr = -1; dr <= 1; ++dr) {
      for (long dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        if (dr != 0 && dc != 0 && !diag) continue;
        const long r = static_cast<long>(cell.row) + dr;
        const long c = static_cast<long>(cell.col) + dc;
        if (r < 0 || c < 0 || r >= h || c >= w) continue;
        const Coord next{static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
        const std::size_t idx = map.index(next);
        if (visited[idx] || map.cells()[idx].is_obstacle()) continue;
        if (next == b) return dist + 1;
        visited[idx] = true;
        queue.push_back({next, dist + 1});
      }
    }
  }
  return std::nullopt;
}

}  // namespace wavesel
