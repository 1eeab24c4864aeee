#pragma once

#include <span>
#include <vector>

#include "sssp.hpp"

namespace meetpoint {

// Per-user masks of vertices at finite distance. A user's own vertex is
// always in their mask.
class ReachabilitySet {
 public:
  ReachabilitySet() = default;
  explicit ReachabilitySet(std::span<const DistanceRow> rows) {
    masks_.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<bool> mask(row.distances.size());
      for (std::size_t v = 0; v < mask.size(); ++v) {
        mask[v] = row.distances[v].reachable();
      }
      masks_.push_back(std::move(mask));
    }
  }
  explicit ReachabilitySet(const AdjacentMatrix& matrix)
      : ReachabilitySet(std::span<const DistanceRow>(matrix.rows())) {}

  std::size_t user_count() const { return masks_.size(); }
  std::size_t vertex_count() const {
    return masks_.empty() ? 0 : masks_.front().size();
  }
  bool reaches(std::size_t user, VertexId v) const { return masks_[user][v]; }

  bool mutually_reachable(VertexId v) const {
    for (const auto& m : masks_) {
      if (!m[v]) return false;
    }
    return !masks_.empty();
  }

 private:
  std::vector<std::vector<bool>> masks_;
};

}  // namespace meetpoint
