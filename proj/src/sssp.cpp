#include "sssp.hpp"

#include <algorithm>
#include <exception>
#include <queue>
#include <thread>
#include <utility>

#include "error.hpp"

namespace meetpoint {

namespace {

struct QueueEntry {
  double distance;
  VertexId vertex;

  // Inverted for std::priority_queue: smallest distance, then smallest id,
  // comes out first.
  bool operator<(const QueueEntry& o) const {
    if (distance != o.distance) return distance > o.distance;
    return vertex > o.vertex;
  }
};

}  // namespace

DistanceRow dijkstra_row(const Graph& graph, VertexId source, std::size_t channel,
                         SearchStats* stats, const SettleObserver& on_settle,
                         SearchDirection direction) {
  if (!graph.contains(source)) {
    fail(ErrorCode::InvalidSource, "source " + std::to_string(source) +
                                       " outside graph of " +
                                       std::to_string(graph.vertex_count()) +
                                       " vertices");
  }
  if (channel >= graph.channel_count()) {
    fail(ErrorCode::UnknownChannel, "channel index " + std::to_string(channel) +
                                        " out of range");
  }

  const std::size_t n = graph.vertex_count();
  DistanceRow row{source, std::vector<Distance>(n)};
  std::vector<char> visited(n, 0);
  std::priority_queue<QueueEntry> queue;
  SearchStats local;

  row.distances[source] = Distance(0.0);
  queue.push({0.0, source});
  while (!queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    ++local.pops;
    if (visited[top.vertex]) continue;
    visited[top.vertex] = 1;
    ++local.settled;
    if (on_settle) on_settle(top.vertex, top.distance);

    auto relax = [&](VertexId next, Weight w) {
      if (visited[next]) return;
      ++local.relaxations;
      const Distance candidate(top.distance + w);
      if (candidate < row.distances[next]) {
        row.distances[next] = candidate;
        queue.push({candidate.value(), next});
      }
    };
    if (direction == SearchDirection::Forward) {
      for (std::size_t e = graph.out_begin(top.vertex); e < graph.out_end(top.vertex); ++e) {
        relax(graph.target(e), graph.weight(e, channel));
      }
    } else {
      for (std::size_t s = graph.in_begin(top.vertex); s < graph.in_end(top.vertex); ++s) {
        relax(graph.source_of_in(s), graph.weight(graph.edge_of_in(s), channel));
      }
    }
  }
  if (stats) *stats += local;
  return row;
}

DistanceRow dijkstra_row(const Graph& graph, VertexId source,
                         std::string_view channel) {
  return dijkstra_row(graph, source, graph.channel_index(channel));
}

AdjacentMatrix::AdjacentMatrix(std::vector<DistanceRow> rows, std::string channel)
    : rows_(std::move(rows)), channel_(std::move(channel)) {
  for (const auto& r : rows_) {
    if (r.distances.size() != vertex_count()) {
      fail(ErrorCode::ShapeMismatch, "matrix rows differ in length");
    }
  }
}

AdjacentMatrix build_partial_matrix(const Graph& graph,
                                    std::span<const VertexId> sources,
                                    std::size_t channel,
                                    const PartialMatrixOptions& options) {
  if (sources.empty()) {
    fail(ErrorCode::EmptySources, "partial matrix needs at least one source");
  }
  if (channel >= graph.channel_count()) {
    fail(ErrorCode::UnknownChannel, "channel index out of range");
  }
  for (VertexId s : sources) {
    if (!graph.contains(s)) {
      fail(ErrorCode::InvalidSource, "source " + std::to_string(s) + " out of range");
    }
  }

  std::vector<DistanceRow> rows(sources.size());
  std::vector<SearchStats> stats(sources.size());
  const std::size_t workers =
      std::clamp<std::size_t>(options.parallelism, 1, sources.size());

  if (workers == 1) {
    for (std::size_t i = 0; i < sources.size(); ++i) {
      rows[i] = dijkstra_row(graph, sources[i], channel, &stats[i]);
    }
  } else {
    // Strided split; each slot is written by exactly one worker.
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < sources.size(); i += workers) {
              rows[i] = dijkstra_row(graph, sources[i], channel, &stats[i]);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  if (options.stats) {
    for (const auto& s : stats) *options.stats += s;
  }
  return AdjacentMatrix(std::move(rows), graph.channels()[channel]);
}

AdjacentMatrix build_partial_matrix(const Graph& graph,
                                    std::span<const VertexId> sources,
                                    std::string_view channel,
                                    const PartialMatrixOptions& options) {
  return build_partial_matrix(graph, sources, graph.channel_index(channel), options);
}

}  // namespace meetpoint
