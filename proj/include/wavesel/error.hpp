#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wavesel {

enum class ErrorCode {
  // map text / model
  EmptyMap,
  RaggedRows,
  UnknownChar,
  DuplicateMarker,
  InvalidMap,
  OutOfBounds,
  // planning
  GoalOutOfBounds,
  GoalOnObstacle,
  StartOutOfBounds,
  StartOnObstacle,
  StartUnreachable,
  NoPath,
  FieldMismatch,
  // selection
  PathCellIsObstacle,
  EmptyTerrainSet,
  EmptyPath,
  // documents
  MalformedDocument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyMap: return "empty_map";
    case ErrorCode::RaggedRows: return "ragged_rows";
    case ErrorCode::UnknownChar: return "unknown_char";
    case ErrorCode::DuplicateMarker: return "duplicate_marker";
    case ErrorCode::InvalidMap: return "invalid_map";
    case ErrorCode::OutOfBounds: return "out_of_bounds";
    case ErrorCode::GoalOutOfBounds: return "goal_out_of_bounds";
    case ErrorCode::GoalOnObstacle: return "goal_on_obstacle";
    case ErrorCode::StartOutOfBounds: return "start_out_of_bounds";
    case ErrorCode::StartOnObstacle: return "start_on_obstacle";
    case ErrorCode::StartUnreachable: return "start_unreachable";
    case ErrorCode::NoPath: return "no_path";
    case ErrorCode::FieldMismatch: return "field_mismatch";
    case ErrorCode::PathCellIsObstacle: return "path_cell_is_obstacle";
    case ErrorCode::EmptyTerrainSet: return "empty_terrain_set";
    case ErrorCode::EmptyPath: return "empty_path";
    case ErrorCode::MalformedDocument: return "malformed_document";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wavesel
