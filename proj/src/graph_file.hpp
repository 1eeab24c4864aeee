#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "scoring.hpp"

namespace meetpoint {

// A graph with users placed on it, as read from a graph file.
struct Instance {
  Graph graph;
  std::vector<VertexId> users;
  std::optional<PreferenceProfile> profile;
};

// Line-oriented instance format, '#' starts a comment:
//   v <count> <channel>...        first channel must be "distance"
//   undirected                    optional; every e line then goes both ways
//   e <from> <to> <w1> [w2...]    one weight per channel
//   u <vertex> [score...]         one user; scores per channel, all or none
// Throws Parse plus graph validation errors.
Instance parse_graph_file(std::string_view text);

}  // namespace meetpoint
