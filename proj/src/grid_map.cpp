#include "grid_map.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "error.hpp"

namespace meetpoint {

GridMap::GridMap(std::size_t width, std::size_t height, std::vector<Cell> cells,
                 std::vector<VertexId> user_starts)
    : width_(width), height_(height), cells_(std::move(cells)),
      user_starts_(std::move(user_starts)) {
  if (cells_.size() != width_ * height_) {
    fail(ErrorCode::InvalidArgument, "cell count does not match dimensions");
  }
  vertex_of_cell_.assign(cells_.size(), -1);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] == Cell::Free) {
      vertex_of_cell_[i] = static_cast<std::int64_t>(cell_of_vertex_.size());
      cell_of_vertex_.push_back(i);
    }
  }
  for (VertexId u : user_starts_) {
    if (u >= cell_of_vertex_.size()) {
      fail(ErrorCode::InvalidSource, "user start is not a free cell");
    }
  }
}

std::optional<VertexId> GridMap::vertex_at(std::size_t row, std::size_t col) const {
  if (row >= height_ || col >= width_) return std::nullopt;
  const std::int64_t v = vertex_of_cell_[row * width_ + col];
  if (v < 0) return std::nullopt;
  return static_cast<VertexId>(v);
}

CellPos GridMap::position_of(VertexId v) const {
  const std::size_t idx = cell_of_vertex_.at(v);
  return {idx / width_, idx % width_};
}

std::string GridMap::render() const {
  std::string out;
  out.reserve((width_ + 1) * height_);
  std::vector<char> users(cells_.size(), 0);
  for (VertexId u : user_starts_) users[cell_of_vertex_[u]] = 1;
  for (std::size_t r = 0; r < height_; ++r) {
    for (std::size_t c = 0; c < width_; ++c) {
      const std::size_t i = r * width_ + c;
      if (cells_[i] == Cell::Wall) {
        out += kWallChar;
      } else {
        out += users[i] ? kUserChar : kFreeChar;
      }
    }
    out += '\n';
  }
  return out;
}

Graph GridMap::to_graph(const std::vector<std::string>& channels) const {
  std::vector<Edge> edges;
  const std::size_t nc = channels.size();
  for (std::size_t r = 0; r < height_; ++r) {
    for (std::size_t c = 0; c < width_; ++c) {
      const auto here = vertex_at(r, c);
      if (!here) continue;
      // Right and down neighbours; the undirected build adds the reverse.
      if (const auto right = vertex_at(r, c + 1)) {
        edges.push_back({*here, *right, std::vector<Weight>(nc, 1.0)});
      }
      if (const auto down = vertex_at(r + 1, c)) {
        edges.push_back({*here, *down, std::vector<Weight>(nc, 1.0)});
      }
    }
  }
  return Graph::build(vertex_count(), std::move(edges), channels,
                      Directedness::Undirected);
}

GridMap GridMap::with_users(std::vector<VertexId> user_starts) const {
  return GridMap(width_, height_, cells_, std::move(user_starts));
}

ParsedGrid parse_grid_map(std::string_view text, UserRequirement users,
                          const std::vector<std::string>& channels) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  std::size_t width = 0;
  for (auto line : lines) width = std::max(width, line.size());
  if (lines.empty() || width == 0) {
    fail(ErrorCode::EmptyMap, "map has no cells");
  }

  const std::size_t height = lines.size();
  std::vector<Cell> cells(width * height, Cell::Wall);
  std::vector<std::size_t> user_cells;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < lines[r].size(); ++c) {
      const char ch = lines[r][c];
      switch (ch) {
        case kWallChar:
          break;
        case kUserChar:
          user_cells.push_back(r * width + c);
          [[fallthrough]];
        case kFreeChar:
          cells[r * width + c] = Cell::Free;
          break;
        default:
          fail(ErrorCode::UnknownCharacter,
               "unknown map character '" + std::string(1, ch) + "' at line " +
                   std::to_string(r + 1) + ", column " + std::to_string(c + 1));
      }
    }
  }
  if (users == UserRequirement::Required && user_cells.empty()) {
    fail(ErrorCode::NoUsers, "map has no 'U' cells");
  }

  // User cells are free, so their vertex id is the count of free cells before.
  std::vector<VertexId> starts;
  starts.reserve(user_cells.size());
  VertexId next = 0;
  std::size_t u = 0;
  for (std::size_t i = 0; i < cells.size() && u < user_cells.size(); ++i) {
    if (cells[i] != Cell::Free) continue;
    if (i == user_cells[u]) {
      starts.push_back(next);
      ++u;
    }
    ++next;
  }

  GridMap map(width, height, std::move(cells), std::move(starts));
  Graph graph = map.to_graph(channels);
  return {std::move(map), std::move(graph)};
}

namespace {

std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace

GridMap place_random_users(const GridMap& map, std::size_t user_count,
                           std::uint64_t seed) {
  const std::size_t n = map.vertex_count();
  if (user_count > n) {
    fail(ErrorCode::InvalidArgument, "more users than free cells");
  }
  std::mt19937_64 rng(seed);
  std::vector<VertexId> picked;
  std::vector<char> used(n, 0);
  while (picked.size() < user_count) {
    const auto v = static_cast<VertexId>(bounded(rng, n));
    if (used[v]) continue;
    used[v] = 1;
    picked.push_back(v);
  }
  return map.with_users(std::move(picked));
}

GridMap generate_grid_map(std::size_t width, std::size_t height,
                          double wall_density, std::size_t user_count,
                          std::uint64_t seed) {
  if (width < 3 || height < 3) {
    fail(ErrorCode::InvalidArgument, "generated maps need at least 3x3 cells");
  }
  if (!(wall_density >= 0.0 && wall_density < 1.0)) {
    fail(ErrorCode::InvalidArgument, "wall density must be in [0, 1)");
  }
  std::mt19937_64 rng(seed);
  std::vector<Cell> cells(width * height, Cell::Wall);
  const auto threshold = static_cast<std::uint64_t>(
      wall_density * static_cast<double>(std::mt19937_64::max()));
  for (std::size_t r = 1; r + 1 < height; ++r) {
    for (std::size_t c = 1; c + 1 < width; ++c) {
      cells[r * width + c] = rng() < threshold ? Cell::Wall : Cell::Free;
    }
  }
  cells[width + 1] = Cell::Free;

  // Keep only the component of the top-left interior cell.
  std::vector<char> seen(cells.size(), 0);
  std::deque<std::size_t> queue{width + 1};
  seen[width + 1] = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    const std::size_t nbrs[] = {i - width, i + width, i - 1, i + 1};
    for (std::size_t j : nbrs) {
      if (cells[j] == Cell::Free && !seen[j]) {
        seen[j] = 1;
        queue.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!seen[i]) cells[i] = Cell::Wall;
  }

  GridMap map(width, height, std::move(cells), {});
  return place_random_users(map, user_count, rng());
}

}  // namespace meetpoint
