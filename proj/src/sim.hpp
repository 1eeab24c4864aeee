#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "scoring.hpp"
#include "sssp.hpp"

namespace meetpoint {

struct SimConfig {
  ObjectiveWeights weights;
  std::optional<PreferenceProfile> profile;
  std::size_t parallelism = 1;
  std::size_t movement_channel = 0;  // users step along this channel
};

struct SimState {
  std::shared_ptr<const Graph> graph;
  std::vector<VertexId> positions;
  SimConfig config;
  std::size_t tick = 0;
  std::optional<VertexId> current_destination;

  bool co_located() const;
};

// Throws InvalidArgument on a missing graph, empty user list or positions
// outside the graph.
SimState make_state(std::shared_ptr<const Graph> graph,
                    std::vector<VertexId> positions, SimConfig config = {});

// One step from `position` along a shortest path to `destination`: the
// neighbour minimising edge weight + remaining distance, lowest id on ties.
// Throws UnreachableDestination.
VertexId next_move(const Graph& graph, VertexId position, VertexId destination,
                   std::size_t channel);

// Same, with distances-to-destination already computed (a backward row).
VertexId next_move(const Graph& graph, VertexId position,
                   const DistanceRow& to_destination, std::size_t channel);

struct StepResult {
  SimState state;
  bool moved = false;
};

// Re-plans from the current positions, then moves every user not already on
// the destination by one hop, all against the pre-move positions.
StepResult step(const SimState& state);

struct TickRecord {
  std::size_t tick = 0;
  VertexId destination = 0;
  std::vector<VertexId> positions;

  friend bool operator==(const TickRecord&, const TickRecord&) = default;
};

enum class SimOutcome { Converged, MaxTicksExceeded };

struct SimTrace {
  VertexId initial_destination = 0;
  VertexId final_destination = 0;
  SimOutcome outcome = SimOutcome::Converged;
  std::vector<TickRecord> records;  // records[0] holds the starting positions
  std::vector<std::size_t> steps;   // ticks in which each user moved

  std::size_t user_count() const { return steps.size(); }
  std::size_t movement_ticks() const {
    return records.empty() ? 0 : records.size() - 1;
  }
  // Sorted distinct vertices each user occupied.
  std::vector<std::vector<VertexId>> visited() const;

  friend bool operator==(const SimTrace&, const SimTrace&) = default;
};

// Steps until every user shares a vertex or `max_ticks` steps have run. On
// the latter the partial trace comes back with outcome MaxTicksExceeded.
SimTrace run(SimState state, std::size_t max_ticks);

// 10 * V, the default tick budget.
std::size_t default_max_ticks(const Graph& graph);

}  // namespace meetpoint
