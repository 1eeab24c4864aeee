#include "trace_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace meetpoint {

namespace {

constexpr std::string_view kMagic = "meetpoint-trace 1";

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join(const std::vector<VertexId>& xs) {
  return join(std::vector<std::size_t>(xs.begin(), xs.end()));
}

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  fail(ErrorCode::Parse, "trace line " + std::to_string(line) + ": " + what);
}

std::size_t parse_number(std::string_view s, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    bad(line, "expected a non-negative integer, got \"" + std::string(s) + "\"");
  }
  return value;
}

std::vector<std::size_t> parse_list(std::string_view s, std::size_t line) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_number(s.substr(start, comma - start), line));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string_view colored(char marker, bool color) {
  if (!color) return {};
  switch (marker) {
    case 'D': return "\x1b[1;31m";
    case 'I': return "\x1b[1;33m";
    case 'U': return "\x1b[1;32m";
    case '.': return "\x1b[2m";
    default: return {};
  }
}

}  // namespace

std::string serialize_trace(const SimTrace& trace, std::size_t vertex_count) {
  std::ostringstream out;
  out << kMagic << '\n'
      << "users " << trace.user_count() << '\n'
      << "vertices " << vertex_count << '\n'
      << "initial " << trace.initial_destination << '\n'
      << "final " << trace.final_destination << '\n'
      << "outcome "
      << (trace.outcome == SimOutcome::Converged ? "converged" : "max_ticks_exceeded")
      << '\n'
      << "steps " << join(trace.steps) << '\n';
  for (const auto& rec : trace.records) {
    out << rec.tick << ' ' << rec.destination << ' ' << join(rec.positions) << '\n';
  }
  return out.str();
}

ParsedTrace parse_trace(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (lines.size() < 7 || lines[0] != kMagic) {
    fail(ErrorCode::Parse, "not a meetpoint trace (missing header)");
  }

  auto field = [&](std::size_t i, std::string_view key) {
    const auto parts = split_ws(lines[i]);
    if (parts.empty() || parts[0] != key) bad(i + 1, "expected \"" + std::string(key) + "\"");
    return parts.size() > 1 ? parts[1] : std::string_view{};
  };

  ParsedTrace parsed;
  SimTrace& t = parsed.trace;
  const std::size_t users = parse_number(field(1, "users"), 2);
  parsed.vertex_count = parse_number(field(2, "vertices"), 3);
  t.initial_destination = static_cast<VertexId>(parse_number(field(3, "initial"), 4));
  t.final_destination = static_cast<VertexId>(parse_number(field(4, "final"), 5));
  const auto outcome = field(5, "outcome");
  if (outcome == "converged") {
    t.outcome = SimOutcome::Converged;
  } else if (outcome == "max_ticks_exceeded") {
    t.outcome = SimOutcome::MaxTicksExceeded;
  } else {
    bad(6, "unknown outcome \"" + std::string(outcome) + "\"");
  }
  t.steps = parse_list(field(6, "steps"), 7);
  if (t.steps.size() != users) bad(7, "step count list does not match user count");

  for (std::size_t i = 7; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto parts = split_ws(lines[i]);
    if (parts.size() != 3) bad(i + 1, "expected \"<tick> <destination> <positions>\"");
    TickRecord rec;
    rec.tick = parse_number(parts[0], i + 1);
    rec.destination = static_cast<VertexId>(parse_number(parts[1], i + 1));
    for (std::size_t p : parse_list(parts[2], i + 1)) {
      rec.positions.push_back(static_cast<VertexId>(p));
    }
    if (rec.positions.size() != users) bad(i + 1, "wrong number of positions");
    t.records.push_back(std::move(rec));
  }
  if (t.records.empty()) fail(ErrorCode::Parse, "trace has no tick records");

  auto in_range = [&](std::size_t v) { return v < parsed.vertex_count; };
  bool ok = in_range(t.initial_destination) && in_range(t.final_destination);
  for (const auto& rec : t.records) {
    ok = ok && in_range(rec.destination);
    for (VertexId p : rec.positions) ok = ok && in_range(p);
  }
  if (!ok) fail(ErrorCode::Parse, "trace references a vertex outside its own vertex count");
  return parsed;
}

std::string render_frame(const GridMap& map, const SimTrace& trace,
                         std::size_t index, const RenderOptions& options) {
  const std::size_t w = map.width();
  std::vector<char> grid(w * map.height());
  for (std::size_t r = 0; r < map.height(); ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      grid[r * w + c] = map.cell(r, c) == Cell::Wall ? kWallChar : kFreeChar;
    }
  }
  auto mark = [&](VertexId v, char ch) {
    const CellPos p = map.position_of(v);
    grid[p.row * w + p.col] = ch;
  };
  for (std::size_t i = 0; i <= index; ++i) {
    for (VertexId p : trace.records[i].positions) mark(p, '.');
  }
  for (VertexId p : trace.records[index].positions) mark(p, kUserChar);
  mark(trace.initial_destination, 'I');
  const bool last = index + 1 == trace.records.size();
  mark(last ? trace.final_destination : trace.records[index].destination, 'D');

  std::string out;
  out.reserve(grid.size() + map.height());
  for (std::size_t r = 0; r < map.height(); ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const char ch = grid[r * w + c];
      const auto on = colored(ch, options.color);
      out += on;
      out += ch;
      if (!on.empty()) out += "\x1b[0m";
    }
    out += '\n';
  }
  return out;
}

std::string render_trace(const GridMap& map, const ParsedTrace& parsed,
                         const RenderOptions& options) {
  const SimTrace& trace = parsed.trace;
  if (parsed.vertex_count != map.vertex_count()) {
    fail(ErrorCode::InconsistentTrace,
         "trace covers " + std::to_string(parsed.vertex_count) +
             " vertices but the map has " + std::to_string(map.vertex_count()));
  }
  if (!map.user_starts().empty() && !trace.records.empty() &&
      map.user_starts().size() != trace.records.front().positions.size()) {
    fail(ErrorCode::InconsistentTrace, "trace and map disagree on the number of users");
  }
  std::string out;
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    if (i) out += '\n';
    out += "tick " + std::to_string(trace.records[i].tick) + " destination " +
           std::to_string(i + 1 == trace.records.size() ? trace.final_destination
                                                        : trace.records[i].destination) +
           '\n';
    out += render_frame(map, trace, i, options);
  }
  return out;
}

}  // namespace meetpoint
