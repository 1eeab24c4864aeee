#pragma once

#include <string>
#include <string_view>

#include "grid_map.hpp"
#include "sim.hpp"

namespace meetpoint {

// Text trace:
//   meetpoint-trace 1
//   users <k>
//   vertices <V>
//   initial <I>
//   final <D>
//   outcome converged|max_ticks_exceeded
//   steps <s1>,<s2>,...
//   <tick> <destination> <p1>,<p2>,...      (one line per record)
std::string serialize_trace(const SimTrace& trace, std::size_t vertex_count);

struct ParsedTrace {
  SimTrace trace;
  std::size_t vertex_count = 0;
};

// Throws Parse.
ParsedTrace parse_trace(std::string_view text);

struct RenderOptions {
  bool color = false;  // ANSI escapes around markers
};

// One frame of the map for record `index`: visited cells '.', current user
// positions 'U', initial destination 'I', destination 'D' (the achieved one
// on the last frame). Later markers win.
std::string render_frame(const GridMap& map, const SimTrace& trace,
                         std::size_t index, const RenderOptions& options = {});

// Every frame, each preceded by a "tick <t> destination <d>" line and
// separated by blank lines. Throws InconsistentTrace when the trace does not
// fit the map.
std::string render_trace(const GridMap& map, const ParsedTrace& trace,
                         const RenderOptions& options = {});

}  // namespace meetpoint
