#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace meetpoint {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidEdgeEndpoint: return "InvalidEdgeEndpoint";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::EmptyChannelList: return "EmptyChannelList";
    case ErrorCode::UnknownChannel: return "UnknownChannel";
    case ErrorCode::InvalidSource: return "InvalidSource";
    case ErrorCode::EmptySources: return "EmptySources";
    case ErrorCode::UnknownCharacter: return "UnknownCharacter";
    case ErrorCode::NoUsers: return "NoUsers";
    case ErrorCode::EmptyMap: return "EmptyMap";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::ZeroSum: return "ZeroSum";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::AllZeroScores: return "AllZeroScores";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NoMutuallyReachableVertex: return "NoMutuallyReachableVertex";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::UnreachableDestination: return "UnreachableDestination";
    case ErrorCode::MaxTicksExceeded: return "MaxTicksExceeded";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InconsistentTrace: return "InconsistentTrace";
  }
  return "Unknown";
}

Graph Graph::build(std::size_t vertex_count, std::vector<Edge> edges,
                   std::vector<std::string> channels,
                   Directedness directedness) {
  if (channels.empty()) {
    fail(ErrorCode::EmptyChannelList, "graph needs at least one channel");
  }
  if (channels.front() != kDistanceChannel) {
    fail(ErrorCode::InvalidArgument,
         "first channel must be \"distance\", got \"" + channels.front() + "\"");
  }
  for (std::size_t i = 0; i < channels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (channels[i] == channels[j]) {
        fail(ErrorCode::InvalidArgument, "duplicate channel \"" + channels[i] + "\"");
      }
    }
  }
  if (vertex_count > std::numeric_limits<VertexId>::max()) {
    fail(ErrorCode::InvalidArgument, "vertex count exceeds id range");
  }

  Graph g;
  g.vertex_count_ = vertex_count;
  g.channels_ = std::move(channels);
  const std::size_t nc = g.channels_.size();

  for (const Edge& e : edges) {
    if (e.from >= vertex_count || e.to >= vertex_count) {
      fail(ErrorCode::InvalidEdgeEndpoint,
           "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
               ") outside [0," + std::to_string(vertex_count) + ")");
    }
    if (e.weights.size() != nc) {
      fail(ErrorCode::InvalidArgument,
           "edge carries " + std::to_string(e.weights.size()) +
               " weights, graph has " + std::to_string(nc) + " channels");
    }
    for (Weight w : e.weights) {
      if (std::isnan(w) || w < 0) {
        fail(ErrorCode::NegativeWeight, "edge weight must be >= 0");
      }
      if (!std::isfinite(w)) {
        fail(ErrorCode::InvalidArgument, "edge weight must be finite");
      }
      if (w != std::floor(w)) g.integral_ = false;
    }
  }

  if (directedness == Directedness::Undirected) {
    const std::size_t n = edges.size();
    edges.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      Edge reversed{edges[i].to, edges[i].from, edges[i].weights};
      edges.push_back(std::move(reversed));
    }
  }

  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.weights.front() < b.weights.front();
  });

  const std::size_t m = edges.size();
  g.out_offsets_.assign(vertex_count + 1, 0);
  g.targets_.resize(m);
  g.weights_.assign(nc, std::vector<Weight>(m));
  for (std::size_t i = 0; i < m; ++i) {
    ++g.out_offsets_[edges[i].from + 1];
    g.targets_[i] = edges[i].to;
    for (std::size_t c = 0; c < nc; ++c) g.weights_[c][i] = edges[i].weights[c];
  }
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(),
                   g.out_offsets_.begin());

  // Reverse adjacency, sources ascending within each target bucket.
  g.in_offsets_.assign(vertex_count + 1, 0);
  for (const Edge& e : edges) ++g.in_offsets_[e.to + 1];
  std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(),
                   g.in_offsets_.begin());
  g.in_sources_.resize(m);
  g.in_edges_.resize(m);
  std::vector<std::size_t> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t slot = fill[edges[i].to]++;
    g.in_sources_[slot] = edges[i].from;
    g.in_edges_[slot] = i;
  }
  return g;
}

std::size_t Graph::channel_index(std::string_view name) const {
  for (std::size_t c = 0; c < channels_.size(); ++c) {
    if (channels_[c] == name) return c;
  }
  fail(ErrorCode::UnknownChannel, "unknown channel \"" + std::string(name) + "\"");
}

std::vector<Arc> Graph::neighbors(VertexId v, std::size_t channel) const {
  if (!contains(v)) {
    fail(ErrorCode::InvalidSource, "vertex " + std::to_string(v) + " out of range");
  }
  if (channel >= channels_.size()) {
    fail(ErrorCode::UnknownChannel, "channel index out of range");
  }
  std::vector<Arc> arcs;
  arcs.reserve(out_end(v) - out_begin(v));
  for (std::size_t e = out_begin(v); e < out_end(v); ++e) {
    arcs.push_back({targets_[e], weights_[channel][e]});
  }
  return arcs;
}

}  // namespace meetpoint
