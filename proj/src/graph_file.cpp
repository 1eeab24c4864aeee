#include "graph_file.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "error.hpp"

namespace meetpoint {

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  fail(ErrorCode::Parse, "graph file line " + std::to_string(line) + ": " + what);
}

template <typename T>
T number(const std::string& token, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    bad(line, "bad number \"" + token + "\"");
  }
  return value;
}

}  // namespace

Instance parse_graph_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;

  std::optional<std::size_t> vertex_count;
  std::vector<std::string> channels;
  std::vector<Edge> edges;
  std::vector<VertexId> users;
  std::vector<std::vector<int>> scores;
  bool undirected = false;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& kind = tok[0];
    if (kind == "v") {
      if (vertex_count) bad(line_no, "duplicate v line");
      if (tok.size() < 3) bad(line_no, "expected \"v <count> <channel>...\"");
      vertex_count = number<std::size_t>(tok[1], line_no);
      channels.assign(tok.begin() + 2, tok.end());
    } else if (kind == "undirected") {
      if (!edges.empty()) bad(line_no, "\"undirected\" must precede all edges");
      undirected = true;
    } else if (kind == "e") {
      if (!vertex_count) bad(line_no, "edge before v line");
      if (tok.size() != 3 + channels.size()) {
        bad(line_no, "edge needs " + std::to_string(channels.size()) + " weight(s)");
      }
      Edge e;
      e.from = number<VertexId>(tok[1], line_no);
      e.to = number<VertexId>(tok[2], line_no);
      for (std::size_t c = 0; c < channels.size(); ++c) {
        e.weights.push_back(number<double>(tok[3 + c], line_no));
      }
      edges.push_back(std::move(e));
    } else if (kind == "u") {
      if (!vertex_count) bad(line_no, "user before v line");
      if (tok.size() != 2 && tok.size() != 2 + channels.size()) {
        bad(line_no, "user takes no scores or one per channel");
      }
      users.push_back(number<VertexId>(tok[1], line_no));
      std::vector<int> row;
      for (std::size_t i = 2; i < tok.size(); ++i) row.push_back(number<int>(tok[i], line_no));
      scores.push_back(std::move(row));
    } else {
      bad(line_no, "unknown record \"" + kind + "\"");
    }
  }
  if (!vertex_count) fail(ErrorCode::Parse, "graph file has no v line");

  Instance inst;
  inst.graph = Graph::build(*vertex_count, std::move(edges), std::move(channels),
                            undirected ? Directedness::Undirected : Directedness::Directed);
  for (VertexId u : users) {
    if (!inst.graph.contains(u)) {
      fail(ErrorCode::InvalidSource, "user vertex " + std::to_string(u) + " out of range");
    }
  }
  inst.users = std::move(users);

  std::size_t scored = 0;
  for (const auto& row : scores) scored += row.empty() ? 0 : 1;
  if (scored != 0 && scored != scores.size()) {
    fail(ErrorCode::Parse, "either every user line carries scores or none does");
  }
  if (scored != 0) inst.profile = PreferenceProfile(std::move(scores));
  return inst;
}

}  // namespace meetpoint
