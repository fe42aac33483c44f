#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wavesel/error.hpp"

namespace wavesel {

// Declaration order is priority order: Wall is the most demanding surface.
enum class TerrainClass { Wall, Stairs, Clutter, Slope, Flat };

inline constexpr std::array<TerrainClass, 5> kAllTerrains = {
    TerrainClass::Wall, TerrainClass::Stairs, TerrainClass::Clutter,
    TerrainClass::Slope, TerrainClass::Flat};

constexpr std::string_view to_string(TerrainClass t) noexcept {
  switch (t) {
    case TerrainClass::Wall: return "Wall";
    case TerrainClass::Stairs: return "Stairs";
    case TerrainClass::Clutter: return "Clutter";
    case TerrainClass::Slope: return "Slope";
    case TerrainClass::Flat: return "Flat";
  }
  return "?";
}

inline std::optional<TerrainClass> terrain_from_string(std::string_view s) {
  for (TerrainClass t : kAllTerrains)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

/// A grid cell: a hard obstacle, or traversable ground of some terrain class.
class Cell {
 public:
  static constexpr Cell obstacle() noexcept { return Cell{}; }
  static constexpr Cell traversable(TerrainClass t) noexcept { return Cell{t}; }

  constexpr bool is_obstacle() const noexcept { return !terrain_.has_value(); }
  constexpr bool is_traversable() const noexcept { return terrain_.has_value(); }

  /// Terrain of a traversable cell; nullopt for obstacles.
  constexpr std::optional<TerrainClass> terrain() const noexcept { return terrain_; }

  friend constexpr bool operator==(const Cell&, const Cell&) = default;

 private:
  constexpr Cell() = default;
  constexpr explicit Cell(TerrainClass t) : terrain_(t) {}

  std::optional<TerrainClass> terrain_;
};

/// Zero-based (row, col); row 0 is the top line of a map file.
struct Coord {
  std::size_t row = 0;
  std::size_t col = 0;

  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

inline std::string to_string(const Coord& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

enum class Connectivity { Four = 4, Eight = 8 };

/// Rectangular terrain map, immutable once built.
class GridMap {
 public:
  /// Validates the invariants: positive dimensions, matching cell count,
  /// distinct markers, each marker on a Flat cell.
  GridMap(std::size_t width, std::size_t height, std::vector<Cell> cells,
          std::optional<Coord> start = std::nullopt,
          std::optional<Coord> goal = std::nullopt)
      : width_(width),
        height_(height),
        cells_(std::move(cells)),
        start_(start),
        goal_(goal) {
    if (width_ == 0 || height_ == 0)
      throw Error(ErrorCode::EmptyMap, "map has zero width or height");
    if (cells_.size() != width_ * height_)
      throw Error(ErrorCode::InvalidMap, "cell count " + std::to_string(cells_.size()) +
                                             " does not match " + std::to_string(width_) +
                                             "x" + std::to_string(height_));
    check_marker(start_, "start");
    check_marker(goal_, "goal");
    if (start_ && goal_ && *start_ == *goal_)
      throw Error(ErrorCode::InvalidMap, "start and goal markers share a cell");
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const std::optional<Coord>& start() const noexcept { return start_; }
  const std::optional<Coord>& goal() const noexcept { return goal_; }

  bool in_bounds(const Coord& c) const noexcept {
    return c.row < height_ && c.col < width_;
  }

  std::size_t index(const Coord& c) const noexcept { return c.row * width_ + c.col; }

  Coord coord(std::size_t index) const noexcept { return {index / width_, index % width_}; }

  /// Throws OutOfBounds.
  const Cell& at(const Coord& c) const {
    if (!in_bounds(c))
      throw Error(ErrorCode::OutOfBounds, "coordinate " + to_string(c) + " outside " +
                                              std::to_string(height_) + "x" +
                                              std::to_string(width_) + " map");
    return cells_[index(c)];
  }

  bool is_traversable(const Coord& c) const noexcept {
    return in_bounds(c) && cells_[index(c)].is_traversable();
  }

  friend bool operator==(const GridMap&, const GridMap&) = default;

 private:
  void check_marker(const std::optional<Coord>& marker, const char* name) const {
    if (!marker) return;
    if (!in_bounds(*marker))
      throw Error(ErrorCode::InvalidMap,
                  std::string(name) + " marker " + to_string(*marker) + " out of bounds");
    if (cells_[index(*marker)] != Cell::traversable(TerrainClass::Flat))
      throw Error(ErrorCode::InvalidMap,
                  std::string(name) + " marker " + to_string(*marker) + " is not on Flat ground");
  }

  std::size_t width_;
  std::size_t height_;
  std::vector<Cell> cells_;
  std::optional<Coord> start_;
  std::optional<Coord> goal_;
};

// ---------------------------------------------------------------------------
// Text format: one glyph per cell, rows separated by '\n', one optional
// trailing '\n'.

inline constexpr char kStartGlyph = 'A';
inline constexpr char kGoalGlyph = 'B';
inline constexpr char kObstacleGlyph = '#';

constexpr char glyph(TerrainClass t) noexcept {
  switch (t) {
    case TerrainClass::Wall: return 'W';
    case TerrainClass::Stairs: return 'H';
    case TerrainClass::Clutter: return '*';
    case TerrainClass::Slope: return '~';
    case TerrainClass::Flat: return '.';
  }
  return '?';
}

constexpr char glyph(const Cell& c) noexcept {
  return c.is_obstacle() ? kObstacleGlyph : glyph(*c.terrain());
}

constexpr std::optional<Cell> cell_from_glyph(char ch) noexcept {
  switch (ch) {
    case '.': return Cell::traversable(TerrainClass::Flat);
    case '~': return Cell::traversable(TerrainClass::Slope);
    case '*': return Cell::traversable(TerrainClass::Clutter);
    case 'H': return Cell::traversable(TerrainClass::Stairs);
    case 'W': return Cell::traversable(TerrainClass::Wall);
    case '#': return Cell::obstacle();
    case 'A':
    case 'B': return Cell::traversable(TerrainClass::Flat);
    default: return std::nullopt;
  }
}

inline GridMap parse_map(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::EmptyMap, "map text is empty");

  std::vector<Cell> cells;
  std::optional<Coord> start, goal;
  std::size_t width = 0, row = 0;

  std::size_t pos = 0;
  while (true) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);

    if (row == 0) {
      width = line.size();
    } else if (line.size() != width) {
      throw Error(ErrorCode::RaggedRows, "row " + std::to_string(row) + " has length " +
                                             std::to_string(line.size()) + ", expected " +
                                             std::to_string(width));
    }
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char ch = line[col];
      const auto cell = cell_from_glyph(ch);
      if (!cell) {
        std::ostringstream msg;
        msg << "unknown character 0x" << std::hex << static_cast<int>(static_cast<unsigned char>(ch))
            << std::dec << " at row " << row << ", col " << col;
        throw Error(ErrorCode::UnknownChar, msg.str());
      }
      if (ch == kStartGlyph || ch == kGoalGlyph) {
        auto& marker = ch == kStartGlyph ? start : goal;
        if (marker)
          throw Error(ErrorCode::DuplicateMarker, std::string("second '") + ch + "' at row " +
                                                      std::to_string(row) + ", col " +
                                                      std::to_string(col));
        marker = Coord{row, col};
      }
      cells.push_back(*cell);
    }

    ++row;
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (width == 0) throw Error(ErrorCode::EmptyMap, "map rows are empty");
  return GridMap(width, row, std::move(cells), start, goal);
}

/// Always ends with a single trailing newline.
inline std::string serialize_map(const GridMap& map) {
  std::string out;
  out.reserve((map.width() + 1) * map.height());
  for (std::size_t r = 0; r < map.height(); ++r) {
    for (std::size_t c = 0; c < map.width(); ++c) {
      const Coord at{r, c};
      if (map.start() == at)
        out.push_back(kStartGlyph);
      else if (map.goal() == at)
        out.push_back(kGoalGlyph);
      else
        out.push_back(glyph(map.cells()[map.index(at)]));
    }
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Neighborhood

struct Offset {
  int drow;
  int dcol;
};

// N, E, S, W, then NE, SE, SW, NW.
inline constexpr std::array<Offset, 8> kNeighborOffsets = {{
    {-1, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 1}, {1, 1}, {1, -1}, {-1, -1},
}};

/// Fills `out` with the in-bounds, non-obstacle neighbors of `at` in fixed
/// order. Hot loops use this to avoid allocating.
inline void neighbors_into(const GridMap& map, const Coord& at, Connectivity connectivity,
                           std::vector<Coord>& out) {
  out.clear();
  const std::size_t count = static_cast<std::size_t>(connectivity);
  for (std::size_t k = 0; k < count; ++k) {
    const auto [dr, dc] = kNeighborOffsets[k];
    if ((dr < 0 && at.row == 0) || (dc < 0 && at.col == 0)) continue;
    const Coord next{at.row + static_cast<std::size_t>(static_cast<std::ptrdiff_t>(dr)),
                     at.col + static_cast<std::size_t>(static_cast<std::ptrdiff_t>(dc))};
    if (map.is_traversable(next)) out.push_back(next);
  }
}

inline std::vector<Coord> neighbors(const GridMap& map, const Coord& at,
                                    Connectivity connectivity = Connectivity::Four) {
  if (!map.in_bounds(at))
    throw Error(ErrorCode::OutOfBounds, "coordinate " + to_string(at) + " outside map");
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(connectivity));
  neighbors_into(map, at, connectivity, out);
  return out;
}

/// True when `a` and `b` are distinct cells one king-move (or rook-move for
/// connectivity 4) apart. Ignores obstacles.
constexpr bool adjacent(const Coord& a, const Coord& b, Connectivity connectivity) noexcept {
  const std::size_t dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  const std::size_t dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  if (dr > 1 || dc > 1 || (dr == 0 && dc == 0)) return false;
  return connectivity == Connectivity::Eight || dr + dc == 1;
}

}  // namespace wavesel
