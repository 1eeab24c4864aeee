#include "sim.hpp"

#include <algorithm>

#include "error.hpp"

namespace meetpoint {

namespace {

VertexId plan(const SimState& state) {
  SolveOptions options;
  options.weights = state.config.weights;
  options.profile = state.config.profile;
  options.parallelism = state.config.parallelism;
  return solve(*state.graph, state.positions, options).destination;
}

}  // namespace

bool SimState::co_located() const {
  return std::all_of(positions.begin(), positions.end(),
                     [&](VertexId p) { return p == positions.front(); });
}

SimState make_state(std::shared_ptr<const Graph> graph,
                    std::vector<VertexId> positions, SimConfig config) {
  if (!graph) fail(ErrorCode::InvalidArgument, "simulation needs a graph");
  if (positions.empty()) fail(ErrorCode::NoUsers, "simulation needs at least one user");
  for (VertexId p : positions) {
    if (!graph->contains(p)) {
      fail(ErrorCode::InvalidSource, "user position " + std::to_string(p) + " out of range");
    }
  }
  if (config.movement_channel >= graph->channel_count()) {
    fail(ErrorCode::UnknownChannel, "movement channel out of range");
  }
  SimState s;
  s.graph = std::move(graph);
  s.positions = std::move(positions);
  s.config = std::move(config);
  return s;
}

VertexId next_move(const Graph& graph, VertexId position,
                   const DistanceRow& to_destination, std::size_t channel) {
  if (!graph.contains(position)) {
    fail(ErrorCode::InvalidSource, "position out of range");
  }
  if (position == to_destination.source) return position;
  if (!to_destination.distances[position].reachable()) {
    fail(ErrorCode::UnreachableDestination,
         "vertex " + std::to_string(to_destination.source) +
             " is unreachable from " + std::to_string(position));
  }
  Distance best;
  VertexId choice = position;
  for (std::size_t e = graph.out_begin(position); e < graph.out_end(position); ++e) {
    const VertexId n = graph.target(e);
    const Distance via = to_destination.distances[n] + graph.weight(e, channel);
    if (via < best || (via == best && n < choice)) {
      best = via;
      choice = n;
    }
  }
  return choice;
}

VertexId next_move(const Graph& graph, VertexId position, VertexId destination,
                   std::size_t channel) {
  if (!graph.contains(destination)) {
    fail(ErrorCode::InvalidSource, "destination out of range");
  }
  const DistanceRow to_dest =
      dijkstra_row(graph, destination, channel, nullptr, {}, SearchDirection::Backward);
  return next_move(graph, position, to_dest, channel);
}

StepResult step(const SimState& state) {
  StepResult result{state, false};
  SimState& next = result.state;
  const VertexId destination = plan(state);
  next.current_destination = destination;
  ++next.tick;
  if (state.co_located()) return result;

  const Graph& graph = *state.graph;
  const std::size_t channel = state.config.movement_channel;
  const DistanceRow to_dest =
      dijkstra_row(graph, destination, channel, nullptr, {}, SearchDirection::Backward);
  for (std::size_t u = 0; u < state.positions.size(); ++u) {
    const VertexId from = state.positions[u];
    if (from == destination) continue;
    next.positions[u] = next_move(graph, from, to_dest, channel);
    result.moved = result.moved || next.positions[u] != from;
  }
  return result;
}

std::vector<std::vector<VertexId>> SimTrace::visited() const {
  std::vector<std::vector<VertexId>> out(user_count());
  for (const auto& rec : records) {
    for (std::size_t u = 0; u < rec.positions.size() && u < out.size(); ++u) {
      out[u].push_back(rec.positions[u]);
    }
  }
  for (auto& cells : out) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  }
  return out;
}

std::size_t default_max_ticks(const Graph& graph) {
  return std::max<std::size_t>(1, 10 * graph.vertex_count());
}

SimTrace run(SimState state, std::size_t max_ticks) {
  if (max_ticks < 1) fail(ErrorCode::InvalidArgument, "max_ticks must be >= 1");

  SimTrace trace;
  trace.steps.assign(state.positions.size(), 0);
  trace.initial_destination = plan(state);
  state.current_destination = trace.initial_destination;
  trace.records.push_back({state.tick, trace.initial_destination, state.positions});

  std::size_t ticks = 0;
  while (!state.co_located() && ticks < max_ticks) {
    StepResult r = step(state);
    for (std::size_t u = 0; u < state.positions.size(); ++u) {
      if (r.state.positions[u] != state.positions[u]) ++trace.steps[u];
    }
    state = std::move(r.state);
    trace.records.push_back({state.tick, *state.current_destination, state.positions});
    ++ticks;
    if (!r.moved) break;
  }

  if (state.co_located()) {
    trace.outcome = SimOutcome::Converged;
    trace.final_destination = state.positions.front();
  } else {
    trace.outcome = SimOutcome::MaxTicksExceeded;
    trace.final_destination = *state.current_destination;
  }
  return trace;
}

}  // namespace meetpoint
