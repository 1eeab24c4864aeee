#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meetpoint {

using VertexId = std::uint32_t;
using Weight = double;

inline constexpr std::string_view kDistanceChannel = "distance";

// Shortest-path length or the Unreachable sentinel. Unreachable orders after
// every finite value, so min/compare work without special cases; arithmetic
// goes through the explicit accessors.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(double value) : value_(value) {}

  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool reachable() const {
    return value_ != std::numeric_limits<double>::infinity();
  }
  constexpr double value() const { return value_; }

  constexpr Distance operator+(Weight w) const {
    return reachable() ? Distance(value_ + w) : Distance();
  }

  friend constexpr auto operator<=>(Distance, Distance) = default;

 private:
  double value_ = std::numeric_limits<double>::infinity();
};

struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  std::vector<Weight> weights;  // one per channel
};

struct Arc {
  VertexId target = 0;
  Weight weight = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class Directedness { Directed, Undirected };

// Immutable weighted multigraph in CSR form, forward and reverse.
class Graph {
 public:
  Graph() = default;

  // Validates and freezes. Undirected input edges are expanded into a pair of
  // directed edges.
  static Graph build(std::size_t vertex_count, std::vector<Edge> edges,
                     std::vector<std::string> channels,
                     Directedness directedness = Directedness::Directed);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return targets_.size(); }
  std::size_t channel_count() const { return channels_.size(); }
  const std::vector<std::string>& channels() const { return channels_; }
  bool contains(VertexId v) const { return v < vertex_count_; }

  // Throws UnknownChannel.
  std::size_t channel_index(std::string_view name) const;

  // Outgoing arcs of v, ascending target id (then ascending weight).
  std::vector<Arc> neighbors(VertexId v, std::size_t channel) const;
  std::vector<Arc> neighbors(VertexId v, std::string_view channel) const {
    return neighbors(v, channel_index(channel));
  }

  // Raw CSR access for the search loops. Edge ids index weight().
  std::size_t out_begin(VertexId v) const { return out_offsets_[v]; }
  std::size_t out_end(VertexId v) const { return out_offsets_[v + 1]; }
  VertexId target(std::size_t edge) const { return targets_[edge]; }
  Weight weight(std::size_t edge, std::size_t channel) const {
    return weights_[channel][edge];
  }

  std::size_t in_begin(VertexId v) const { return in_offsets_[v]; }
  std::size_t in_end(VertexId v) const { return in_offsets_[v + 1]; }
  VertexId source_of_in(std::size_t slot) const {
    return in_sources_[slot];
  }
  std::size_t edge_of_in(std::size_t slot) const { return in_edges_[slot]; }

  // Every edge in every channel is a whole number.
  bool integral_weights() const { return integral_; }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::string> channels_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::vector<Weight>> weights_;  // [channel][edge]
  std::vector<std::size_t> in_offsets_{0};
  std::vector<VertexId> in_sources_;
  std::vector<std::size_t> in_edges_;
  bool integral_ = true;
};

}  // namespace meetpoint
