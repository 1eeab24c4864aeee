#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace meetpoint {

enum class Cell : std::uint8_t { Wall, Free };

inline constexpr char kWallChar = '#';
inline constexpr char kFreeChar = ' ';
inline constexpr char kUserChar = 'U';

struct CellPos {
  std::size_t row = 0;
  std::size_t col = 0;
};

// Rectangular grid; vertex ids are row-major indices over Free cells only.
class GridMap {
 public:
  GridMap() = default;
  GridMap(std::size_t width, std::size_t height, std::vector<Cell> cells,
          std::vector<VertexId> user_starts);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t vertex_count() const { return cell_of_vertex_.size(); }
  const std::vector<VertexId>& user_starts() const { return user_starts_; }

  Cell cell(std::size_t row, std::size_t col) const {
    return cells_[row * width_ + col];
  }
  std::optional<VertexId> vertex_at(std::size_t row, std::size_t col) const;
  CellPos position_of(VertexId v) const;

  // '#' / ' ' / 'U' rows, newline-terminated.
  std::string render() const;

  // 4-connected unit-weight graph; every extra channel copies distance.
  Graph to_graph(const std::vector<std::string>& channels = {
                     std::string(kDistanceChannel)}) const;

  GridMap with_users(std::vector<VertexId> user_starts) const;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::int64_t> vertex_of_cell_;  // -1 for walls
  std::vector<std::size_t> cell_of_vertex_;
  std::vector<VertexId> user_starts_;
};

struct ParsedGrid {
  GridMap map;
  Graph graph;
};

enum class UserRequirement { Optional, Required };

// Short lines are right-padded with walls. Throws UnknownCharacter, EmptyMap,
// NoUsers (only when required).
ParsedGrid parse_grid_map(std::string_view text,
                          UserRequirement users = UserRequirement::Optional,
                          const std::vector<std::string>& channels = {
                              std::string(kDistanceChannel)});

// Open map with a wall border and interior walls dropped at `wall_density`,
// then pruned to the component containing the first free cell. Users are
// placed on distinct free cells. Deterministic in `seed` across platforms.
GridMap generate_grid_map(std::size_t width, std::size_t height,
                          double wall_density, std::size_t user_count,
                          std::uint64_t seed);

// Places `user_count` users on distinct free cells of `map`.
GridMap place_random_users(const GridMap& map, std::size_t user_count,
                           std::uint64_t seed);

}  // namespace meetpoint
