#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace meetpoint {

// One row of the partial adjacent matrix: shortest distances from `source`.
struct DistanceRow {
  VertexId source = 0;
  std::vector<Distance> distances;

  friend bool operator==(const DistanceRow&, const DistanceRow&) = default;
};

// Work counters; `pops` counts every queue pop including stale entries.
struct SearchStats {
  std::size_t pops = 0;
  std::size_t settled = 0;
  std::size_t relaxations = 0;

  SearchStats& operator+=(const SearchStats& o) {
    pops += o.pops;
    settled += o.settled;
    relaxations += o.relaxations;
    return *this;
  }
};

// Called once per vertex, in settle order, with its final distance.
using SettleObserver = std::function<void(VertexId, double)>;

enum class SearchDirection {
  Forward,   // distances from source
  Backward,  // distances to source (walks incoming edges)
};

// Priority queue ordered by (tentative distance, vertex id), lazy deletion of
// stale entries, visited set. Throws InvalidSource, UnknownChannel.
DistanceRow dijkstra_row(const Graph& graph, VertexId source, std::size_t channel,
                         SearchStats* stats = nullptr,
                         const SettleObserver& on_settle = {},
                         SearchDirection direction = SearchDirection::Forward);

DistanceRow dijkstra_row(const Graph& graph, VertexId source,
                         std::string_view channel);

// One row per user, rows in source order. Not a square matrix.
class AdjacentMatrix {
 public:
  AdjacentMatrix() = default;
  AdjacentMatrix(std::vector<DistanceRow> rows, std::string channel);

  std::size_t user_count() const { return rows_.size(); }
  std::size_t vertex_count() const {
    return rows_.empty() ? 0 : rows_.front().distances.size();
  }
  const std::vector<DistanceRow>& rows() const { return rows_; }
  const DistanceRow& row(std::size_t user) const { return rows_.at(user); }
  Distance at(std::size_t user, VertexId v) const {
    return rows_[user].distances[v];
  }
  const std::string& channel() const { return channel_; }

  friend bool operator==(const AdjacentMatrix&, const AdjacentMatrix&) = default;

 private:
  std::vector<DistanceRow> rows_;
  std::string channel_;
};

struct PartialMatrixOptions {
  // Worker threads for independent rows; 0 and 1 both mean sequential.
  std::size_t parallelism = 1;
  SearchStats* stats = nullptr;
};

// Throws EmptySources plus anything dijkstra_row throws.
AdjacentMatrix build_partial_matrix(const Graph& graph,
                                    std::span<const VertexId> sources,
                                    std::size_t channel,
                                    const PartialMatrixOptions& options = {});

AdjacentMatrix build_partial_matrix(const Graph& graph,
                                    std::span<const VertexId> sources,
                                    std::string_view channel,
                                    const PartialMatrixOptions& options = {});

}  // namespace meetpoint
