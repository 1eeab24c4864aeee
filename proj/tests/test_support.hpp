#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "grid_map.hpp"

namespace meetpoint::testing {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

// Connected graph: random spanning tree plus extra random edges. Integer
// weights in [1, 9]. Directed graphs get both tree directions so every vertex
// reaches every other.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                    Directedness directedness,
                                    std::size_t channels = 1) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  std::vector<std::string> names{"distance"};
  for (std::size_t c = 1; c < channels; ++c) names.push_back("c" + std::to_string(c));
  auto weights = [&] {
    std::vector<Weight> w;
    for (std::size_t c = 0; c < channels; ++c) w.push_back(static_cast<Weight>(uniform(rng, 1, 9)));
    return w;
  };
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = static_cast<VertexId>(uniform(rng, 0, v - 1));
    edges.push_back({parent, static_cast<VertexId>(v), weights()});
    if (directedness == Directedness::Directed) {
      edges.push_back({static_cast<VertexId>(v), parent, weights()});
    }
  }
  const std::size_t extra = n > 1 ? uniform(rng, 0, 2 * n) : 0;
  for (std::size_t i = 0; i < extra; ++i) {
    const auto a = static_cast<VertexId>(uniform(rng, 0, n - 1));
    const auto b = static_cast<VertexId>(uniform(rng, 0, n - 1));
    edges.push_back({a, b, weights()});
  }
  return Graph::build(n, std::move(edges), names, directedness);
}

inline std::vector<VertexId> random_users(std::mt19937_64& rng, const Graph& g,
                                          std::size_t lo, std::size_t hi) {
  const std::size_t k = uniform(rng, lo, hi);
  std::vector<VertexId> users;
  for (std::size_t i = 0; i < k; ++i) {
    users.push_back(static_cast<VertexId>(uniform(rng, 0, g.vertex_count() - 1)));
  }
  return users;
}

// The four-vertex instance whose partial matrix is [[0,2,4,1],[2,0,6,3]].
inline Graph worked_example_graph() {
  return Graph::build(4, {{0, 1, {2}}, {0, 2, {4}}, {0, 3, {1}}}, {"distance"},
                      Directedness::Undirected);
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string source_path(const std::string& relative) {
  return std::string(MEETPOINT_SOURCE_DIR) + "/" + relative;
}

}  // namespace meetpoint::testing
