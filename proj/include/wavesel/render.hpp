#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavesel/gridmap.hpp"
#include "wavesel/wavefront.hpp"

namespace wavesel {

inline constexpr char kPathGlyph = '+';

/// Map text with path cells drawn as '+'. Marker cells keep 'A' / 'B'.
inline std::string render_ascii(const GridMap& map, const Path& path) {
  std::string text = serialize_map(map);
  const std::size_t stride = map.width() + 1;
  for (const Coord& c : path.coords) {
    if (map.at(c).is_obstacle())
      throw Error(ErrorCode::PathCellIsObstacle, "path cell " + to_string(c) + " is an obstacle");
    if (map.start() == c || map.goal() == c) continue;
    text[c.row * stride + c.col] = kPathGlyph;
  }
  return text;
}

// Gray levels for reached cells; the goal is darkest. Kept clear of pure
// black (obstacles) and pure white (unreached).
inline constexpr std::uint8_t kRampDark = 32;
inline constexpr std::uint8_t kRampLight = 224;

/// Gray level of one field value.
inline std::uint8_t field_gray(ValueField::value_type v, ValueField::value_type max_value) {
  if (v == ValueField::kObstacle) return 0;
  if (v == ValueField::kUnreached) return 255;
  if (max_value <= ValueField::kGoal) return kRampDark;
  const auto span = static_cast<std::uint64_t>(kRampLight - kRampDark);
  const auto step = static_cast<std::uint64_t>(v - ValueField::kGoal);
  const auto range = static_cast<std::uint64_t>(max_value - ValueField::kGoal);
  return static_cast<std::uint8_t>(kRampDark + (step * span + range / 2) / range);
}

/// Binary PPM (P6, maxval 255), one gray pixel per cell.
inline std::vector<std::uint8_t> emit_field_image(const ValueField& field) {
  const std::string header = "P6\n" + std::to_string(field.width()) + " " +
                             std::to_string(field.height()) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + field.values().size() * 3);
  const auto max_value = field.max_value();
  for (auto v : field.values()) {
    const std::uint8_t g = field_gray(v, max_value);
    bytes.insert(bytes.end(), {g, g, g});
  }
  return bytes;
}

}  // namespace wavesel
