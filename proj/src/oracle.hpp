#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "graph.hpp"
#include "scoring.hpp"

namespace meetpoint {

// Dense vertex x vertex shortest-distance matrix.
class FullMatrix {
 public:
  explicit FullMatrix(std::size_t n) : n_(n), d_(n * n) {}

  std::size_t size() const { return n_; }
  Distance at(std::size_t from, std::size_t to) const { return d_[from * n_ + to]; }
  Distance& at(std::size_t from, std::size_t to) { return d_[from * n_ + to]; }

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Standard triple loop. Throws UnknownChannel, Timeout (checked once per
// intermediate vertex).
FullMatrix floyd_all_pairs(const Graph& graph, std::size_t channel,
                           Deadline deadline = std::nullopt);

// Exhaustive search over all vertices using Floyd matrices per channel.
// Shares no scoring code with solve(): the similarity term sums ordered pairs
// as written and the pick is an argmax of normalised goodness. Throws
// NoCandidate, Timeout.
VertexId brute_force_destination(const Graph& graph,
                                 std::span<const VertexId> users,
                                 const std::optional<PreferenceProfile>& profile,
                                 const ObjectiveWeights& weights,
                                 Deadline deadline = std::nullopt);

}  // namespace meetpoint
