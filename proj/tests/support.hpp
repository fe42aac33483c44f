#pragma once

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wavesel/gridmap.hpp"

namespace wavesel::testing {

/// Random rectangular map, each cell an obstacle with probability
/// `obstacle_density`, otherwise a uniformly random terrain. No markers.
inline GridMap random_map(std::mt19937& rng, std::size_t width, std::size_t height,
                          double obstacle_density) {
  std::bernoulli_distribution blocked(obstacle_density);
  std::uniform_int_distribution<int> terrain(0, 4);
  std::vector<Cell> cells;
  cells.reserve(width * height);
  for (std::size_t i = 0; i < width * height; ++i)
    cells.push_back(blocked(rng) ? Cell::obstacle()
                                 : Cell::traversable(kAllTerrains[static_cast<std::size_t>(terrain(rng))]));
  return GridMap(width, height, std::move(cells));
}

inline GridMap random_map(std::mt19937& rng, std::size_t max_side, double max_density) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::uniform_real_distribution<double> density(0.0, max_density);
  const std::size_t w = side(rng), h = side(rng);
  return random_map(rng, w, h, density(rng));
}

inline std::vector<Coord> traversable_cells(const GridMap& map) {
  std::vector<Coord> out;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map.cells()[i].is_traversable()) out.push_back(map.coord(i));
  return out;
}

inline std::optional<Coord> random_traversable(std::mt19937& rng, const GridMap& map) {
  const auto cells = traversable_cells(map);
  if (cells.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
  return cells[pick(rng)];
}

/// Copy of `map` with markers at `start` / `goal`, both forced to Flat.
inline GridMap with_markers(const GridMap& map, Coord start, Coord goal) {
  auto cells = map.cells();
  cells[map.index(start)] = Cell::traversable(TerrainClass::Flat);
  cells[map.index(goal)] = Cell::traversable(TerrainClass::Flat);
  return GridMap(map.width(), map.height(), std::move(cells), start, goal);
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

#ifdef WAVESEL_FIXTURE_DIR
inline std::string fixture_path(const std::string& name) {
  return std::string(WAVESEL_FIXTURE_DIR) + "/" + name;
}
#endif

}  // namespace wavesel::testing
