#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wavesel/wavefront.hpp"

namespace wavesel {
namespace {

using Values = std::vector<ValueField::value_type>;

// Exhaustive enumeration of simple paths from `a` to `b`. Exponential, tiny
// maps only. Returns every path of minimal edge count.
std::vector<std::vector<Coord>> all_shortest_simple_paths(const GridMap& map, Coord a, Coord b,
                                                          Connectivity conn) {
  std::vector<std::vector<Coord>> best;
  std::vector<Coord> stack{a};
  std::set<Coord> on_path{a};
  std::function<void()> dfs = [&] {
    const Coord here = stack.back();
    if (here == b) {
      if (best.empty() || stack.size() < best.front().size()) best.clear();
      if (best.empty() || stack.size() == best.front().size()) best.push_back(stack);
      return;
    }
    if (!best.empty() && stack.size() >= best.front().size()) return;
    for (std::size_t i = 0; i < map.size(); ++i) {
      const Coord next = map.coord(i);
      if (!map.cells()[i].is_traversable() || on_path.count(next) || !adjacent(here, next, conn))
        continue;
      stack.push_back(next);
      on_path.insert(next);
      dfs();
      on_path.erase(next);
      stack.pop_back();
    }
  };
  dfs();
  return best;
}

TEST(Expand, Corridor) {
  const GridMap map = parse_map("B.A");
  EXPECT_EQ(expand(map, *map.goal()).values(), (Values{2, 3, 4}));
}

TEST(Expand, BlockedCorridor) {
  const GridMap map = parse_map("B#A");
  EXPECT_EQ(expand(map, *map.goal()).values(), (Values{2, 1, 0}));
}

TEST(Expand, RingAroundObstacle) {
  const GridMap map = parse_map("B..\n.#.\n..A");
  // Shortest route length from the enumeration oracle.
  const auto routes = all_shortest_simple_paths(map, {2, 2}, {0, 0}, Connectivity::Four);
  ASSERT_FALSE(routes.empty());
  EXPECT_EQ(routes.front().size() - 1, 4u);

  const ValueField field = expand(map, *map.goal());
  EXPECT_EQ(field.at({2, 2}), 6u);
  EXPECT_EQ(field.values(), (Values{2, 3, 4, 3, 1, 5, 4, 5, 6}));
}

TEST(Expand, EndpointErrors) {
  const GridMap map = parse_map("B#A");
  try {
    expand(map, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GoalOnObstacle);
  }
  try {
    expand(map, {0, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GoalOutOfBounds);
  }
}

TEST(ExtractPath, Corridor) {
  const GridMap map = parse_map("B.A");
  const ValueField field = expand(map, *map.goal());
  EXPECT_EQ(extract_path(field, map, {0, 2}).coords,
            (std::vector<Coord>{{0, 2}, {0, 1}, {0, 0}}));
}

TEST(ExtractPath, StartIsGoal) {
  const GridMap map = parse_map("B.A");
  const ValueField field = expand(map, *map.goal());
  const Path path = extract_path(field, map, {0, 0});
  EXPECT_EQ(path.coords, (std::vector<Coord>{{0, 0}}));
  EXPECT_EQ(path.length(), 0u);
}

TEST(ExtractPath, TieBreakPrefersNorth) {
  const GridMap map = parse_map("B..\n.#.\n..A");
  const auto routes = all_shortest_simple_paths(map, {2, 2}, {0, 0}, Connectivity::Four);
  ASSERT_EQ(routes.size(), 2u);
  // The two optimal routes leave (2,2) northward and westward.
  std::set<Coord> first_steps{routes[0][1], routes[1][1]};
  EXPECT_EQ(first_steps, (std::set<Coord>{{1, 2}, {2, 1}}));

  const Path path = extract_path(expand(map, *map.goal()), map, {2, 2});
  EXPECT_EQ(path.length(), 4u);
  EXPECT_EQ(path.coords[1], (Coord{1, 2}));
  EXPECT_EQ(path.coords, (std::vector<Coord>{{2, 2}, {1, 2}, {0, 2}, {0, 1}, {0, 0}}));
}

TEST(ExtractPath, Errors) {
  const GridMap map = parse_map("B#A");
  const ValueField field = expand(map, *map.goal());
  try {
    extract_path(field, map, {0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StartUnreachable);
  }
  try {
    extract_path(field, map, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StartOnObstacle);
  }
}

TEST(PlanPath, Examples) {
  const GridMap open = parse_map("B.A");
  EXPECT_EQ(plan_path(open, *open.start(), *open.goal()).length(), 2u);

  const GridMap blocked = parse_map("B#A");
  try {
    plan_path(blocked, *blocked.start(), *blocked.goal());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoPath);
  }
  try {
    plan_path(blocked, {0, 1}, *blocked.goal());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StartOnObstacle);
  }
}

TEST(PlanPath, DiagonalStepsUnderConnectivityEight) {
  const GridMap map = parse_map("B..\n.#.\n..A");
  const Path path = plan_path(map, {2, 2}, {0, 0}, Connectivity::Eight);
  // The centre is blocked; two king moves are not enough, so 3 edges.
  const auto routes = all_shortest_simple_paths(map, {2, 2}, {0, 0}, Connectivity::Eight);
  EXPECT_EQ(path.length(), routes.front().size() - 1);
  EXPECT_EQ(path.length(), 3u);
}

TEST(BfsOracle, Examples) {
  const GridMap open = parse_map("B.A");
  EXPECT_EQ(bfs_distance_oracle(open, {0, 0}, {0, 2}), 2u);
  const GridMap blocked = parse_map("B#A");
  EXPECT_EQ(bfs_distance_oracle(blocked, {0, 0}, {0, 2}), std::nullopt);
  EXPECT_EQ(bfs_distance_oracle(open, {0, 1}, {0, 1}), 0u);
  EXPECT_THROW(bfs_distance_oracle(blocked, {0, 1}, {0, 0}), Error);
}

// The oracle itself is checked against exhaustive path enumeration.
TEST(BfsOracle, AgreesWithEnumeration) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const GridMap map = testing::random_map(rng, 4, 0.4);
    const auto a = testing::random_traversable(rng, map);
    const auto b = testing::random_traversable(rng, map);
    if (!a || !b) continue;
    for (const auto conn : {Connectivity::Four, Connectivity::Eight}) {
      const auto routes = all_shortest_simple_paths(map, *a, *b, conn);
      const auto d = bfs_distance_oracle(map, *a, *b, conn);
      if (routes.empty())
        EXPECT_FALSE(d.has_value());
      else
        EXPECT_EQ(d, routes.front().size() - 1);
    }
  }
}

TEST(BfsOracle, Symmetric) {
  std::mt19937 rng(5);
  int solvable = 0;
  while (solvable < 500) {
    const GridMap map = testing::random_map(rng, 20, 0.4);
    const auto a = testing::random_traversable(rng, map);
    const auto b = testing::random_traversable(rng, map);
    if (!a || !b) continue;
    const auto forward = bfs_distance_oracle(map, *a, *b);
    if (!forward) continue;
    ++solvable;
    EXPECT_EQ(forward, bfs_distance_oracle(map, *b, *a));
  }
}

TEST(Wavefront, RandomMapProperties) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const GridMap map = testing::random_map(rng, 20, 0.4);
    const auto goal = testing::random_traversable(rng, map);
    if (!goal) continue;
    for (const auto conn : {Connectivity::Four, Connectivity::Eight}) {
      const ValueField field = expand(map, *goal, conn);
      EXPECT_EQ(field, expand(map, *goal, conn));
      EXPECT_EQ(field.at(*goal), ValueField::kGoal);
      for (std::size_t i = 0; i < map.size(); ++i) {
        const Coord c = map.coord(i);
        const auto v = field.at(c);
        EXPECT_EQ(v == ValueField::kObstacle, map.cells()[i].is_obstacle());
        if (v > ValueField::kGoal) {
          bool has_predecessor = false;
          for (const Coord& n : neighbors(map, c, conn)) has_predecessor |= field.at(n) == v - 1;
          EXPECT_TRUE(has_predecessor) << to_string(c);
        }
      }

      const auto start = testing::random_traversable(rng, map);
      if (!field.reached(*start)) continue;
      const Path path = extract_path(field, map, *start, conn);
      EXPECT_EQ(path.length(), field.at(*start) - ValueField::kGoal);
      for (std::size_t k = 1; k < path.coords.size(); ++k) {
        EXPECT_EQ(field.at(path.coords[k]) + 1, field.at(path.coords[k - 1]));
        EXPECT_TRUE(adjacent(path.coords[k - 1], path.coords[k], conn));
      }
    }
  }
}

TEST(Wavefront, EightConnectivityNeverLonger) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const GridMap map = testing::random_map(rng, 24, 0.35);
    const auto a = testing::random_traversable(rng, map);
    const auto b = testing::random_traversable(rng, map);
    if (!a || !b || !bfs_distance_oracle(map, *a, *b)) continue;
    EXPECT_LE(plan_path(map, *a, *b, Connectivity::Eight).length(),
              plan_path(map, *a, *b, Connectivity::Four).length());
  }
}

}  // namespace
}  // namespace wavesel
