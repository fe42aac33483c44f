#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "wavesel/document.hpp"
#include "wavesel/gridmap.hpp"
#include "wavesel/render.hpp"
#include "wavesel/selection.hpp"
#include "wavesel/wavefront.hpp"

namespace wavesel::cli {

enum class ExitCode : int {
  Ok = 0,
  BadArguments = 2,
  ParseError = 3,
  NoPath = 4,
  IoError = 5,
};

enum class Format { Json, Ascii };

struct RunConfig {
  std::filesystem::path map_path;
  std::optional<Coord> start;  // overrides the 'A' marker
  std::optional<Coord> goal;   // overrides the 'B' marker
  Connectivity connectivity = Connectivity::Four;
  Mode mode = Mode::Single;
  Format format = Format::Json;
  std::optional<std::filesystem::path> emit_field;
};

/// Parses "R,C" (non-negative decimal integers, no spaces).
inline std::optional<Coord> parse_coord(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto parse_part = [](std::string_view part) -> std::optional<std::size_t> {
    std::size_t value = 0;
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
  };
  const auto row = parse_part(text.substr(0, comma));
  const auto col = parse_part(text.substr(comma + 1));
  if (!row || !col) return std::nullopt;
  return Coord{*row, *col};
}

namespace detail {

inline ExitCode fail(std::ostream& err, ExitCode code, std::string_view kind,
                     const std::string& message) {
  err << "wavesel: error: " << kind << ": " << message << '\n';
  return code;
}

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) return std::nullopt;
  return text;
}

inline std::string ascii_summary(const Plan& plan) {
  std::ostringstream out;
  out << "length: " << plan.length() << '\n';
  out << "terrain:";
  for (TerrainClass t : plan.profile.present) out << ' ' << to_string(t);
  out << '\n';
  if (plan.mode == Mode::Single) {
    out << "robot: " << to_string(*plan.robot) << '\n';
  } else {
    for (std::size_t i = 0; i < plan.segments.size(); ++i) {
      const Segment& s = plan.segments[i];
      out << "segment " << i << ": " << to_string(s.robot) << " over " << to_string(s.terrain)
          << ' ' << to_string(s.subpath.coords.front()) << " -> "
          << to_string(s.subpath.coords.back()) << '\n';
    }
  }
  return out.str();
}

}  // namespace detail

/// Map file -> wavefront plan -> terrain profile -> robot assignment.
/// Writes the plan to `out`; diagnostics go to `err` as a single line
/// "wavesel: error: <kind>: <message>".
inline ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  using detail::fail;

  const auto text = detail::read_file(config.map_path);
  if (!text)
    return fail(err, ExitCode::IoError, "io_error",
                "cannot read map file " + config.map_path.string());

  std::optional<GridMap> parsed;
  try {
    parsed.emplace(parse_map(*text));
  } catch (const Error& e) {
    return fail(err, ExitCode::ParseError, to_string(e.code()), e.what());
  }
  const GridMap& map = *parsed;

  const auto start = config.start ? config.start : map.start();
  const auto goal = config.goal ? config.goal : map.goal();
  if (!start)
    return fail(err, ExitCode::BadArguments, "bad_arguments",
                "no start: pass --start or mark one 'A' cell");
  if (!goal)
    return fail(err, ExitCode::BadArguments, "bad_arguments",
                "no goal: pass --goal or mark one 'B' cell");
  for (const auto& [name, c] : {std::pair{"start", *start}, std::pair{"goal", *goal}}) {
    if (!map.in_bounds(c))
      return fail(err, ExitCode::BadArguments, "bad_arguments",
                  std::string(name) + " " + to_string(c) + " is outside the " +
                      std::to_string(map.height()) + "x" + std::to_string(map.width()) + " map");
    if (map.at(c).is_obstacle())
      return fail(err, ExitCode::BadArguments, "bad_arguments",
                  std::string(name) + " " + to_string(c) + " is an obstacle");
  }

  const MissionHeader header{map.width(), map.height(), *start, *goal, config.connectivity,
                             config.mode};

  const ValueField field = expand(map, *goal, config.connectivity);
  if (config.emit_field) {
    const auto image = emit_field_image(field);
    std::ofstream img(*config.emit_field, std::ios::binary);
    img.write(reinterpret_cast<const char*>(image.data()),
              static_cast<std::streamsize>(image.size()));
    if (!img)
      return fail(err, ExitCode::IoError, "io_error",
                  "cannot write field image " + config.emit_field->string());
  }

  if (!field.reached(*start)) {
    const std::string reason = "no path from " + to_string(*start) + " to " + to_string(*goal);
    if (config.format == Format::Json)
      out << no_path_document(header, reason).dump(2) << '\n';
    else
      out << serialize_map(map) << "status: no_path\n";
    return fail(err, ExitCode::NoPath, "no_path", reason);
  }

  const Plan plan = make_plan(map, extract_path(field, map, *start, config.connectivity),
                              config.mode);
  if (config.format == Format::Json)
    out << plan_document(header, plan).dump(2) << '\n';
  else
    out << render_ascii(map, plan.path) << detail::ascii_summary(plan);
  return ExitCode::Ok;
}

}  // namespace wavesel::cli
