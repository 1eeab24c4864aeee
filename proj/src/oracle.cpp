#include "oracle.hpp"

#include <cmath>

#include "error.hpp"

namespace meetpoint {

namespace {

void check_deadline(const Deadline& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    fail(ErrorCode::Timeout, "Floyd-Warshall exceeded its time budget");
  }
}

}  // namespace

FullMatrix floyd_all_pairs(const Graph& graph, std::size_t channel,
                           Deadline deadline) {
  if (channel >= graph.channel_count()) {
    fail(ErrorCode::UnknownChannel, "channel index out of range");
  }
  const std::size_t n = graph.vertex_count();
  FullMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.at(i, i) = Distance(0.0);
    const auto v = static_cast<VertexId>(i);
    for (std::size_t e = graph.out_begin(v); e < graph.out_end(v); ++e) {
      const Distance w(graph.weight(e, channel));
      if (w < d.at(i, graph.target(e))) d.at(i, graph.target(e)) = w;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    check_deadline(deadline);
    for (std::size_t i = 0; i < n; ++i) {
      const Distance ik = d.at(i, k);
      if (!ik.reachable()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Distance kj = d.at(k, j);
        if (!kj.reachable()) continue;
        const Distance through(ik.value() + kj.value());
        if (through < d.at(i, j)) d.at(i, j) = through;
      }
    }
  }
  return d;
}

VertexId brute_force_destination(const Graph& graph,
                                 std::span<const VertexId> users,
                                 const std::optional<PreferenceProfile>& profile,
                                 const ObjectiveWeights& weights,
                                 Deadline deadline) {
  const std::size_t n = graph.vertex_count();
  const std::size_t k = users.size();
  for (VertexId u : users) {
    if (!graph.contains(u)) fail(ErrorCode::InvalidSource, "user vertex out of range");
  }
  if (k == 0) fail(ErrorCode::EmptySources, "no users");

  // Objective weights straight from the raw score sums.
  std::vector<double> channel_weight(graph.channel_count(), 0.0);
  if (profile) {
    double points = 0;
    for (std::size_t u = 0; u < profile->user_count(); ++u) {
      for (std::size_t c = 0; c < profile->objective_count(); ++c) {
        channel_weight[c] += profile->score(u, c);
        points += profile->score(u, c);
      }
    }
    for (double& w : channel_weight) w /= points;
  } else {
    channel_weight[0] = 1.0;
  }

  std::vector<std::vector<double>> cost(k, std::vector<double>(n, 0.0));
  std::vector<bool> candidate(n, true);
  for (std::size_t c = 0; c < graph.channel_count(); ++c) {
    if (channel_weight[c] == 0) continue;
    const FullMatrix full = floyd_all_pairs(graph, c, deadline);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t v = 0; v < n; ++v) {
        const Distance d = full.at(users[a], v);
        if (!d.reachable()) {
          candidate[v] = false;
        } else {
          cost[a][v] += channel_weight[c] * d.value();
        }
      }
    }
  }

  std::vector<double> total(n, 0.0);
  std::vector<double> spread(n, 0.0);
  double total_sum = 0;
  double spread_sum = 0;
  bool any = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (!candidate[v]) continue;
    any = true;
    for (std::size_t a = 0; a < k; ++a) {
      total[v] += cost[a][v];
      for (std::size_t b = 0; b < k; ++b) spread[v] += std::abs(cost[a][v] - cost[b][v]);
    }
    total_sum += total[v];
    spread_sum += spread[v];
  }
  if (!any) fail(ErrorCode::NoCandidate, "no vertex is reachable by every user");

  // Goodness in [0, 0.5] per term, larger is better.
  VertexId best = 0;
  double best_goodness = -1.0;
  std::vector<double> goodness(n, -1.0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!candidate[v]) continue;
    const double g_total = total_sum > 0 ? (1.0 - total[v] / total_sum) / 2.0 : 0.5;
    const double g_spread = spread_sum > 0 ? (1.0 - spread[v] / spread_sum) / 2.0 : 0.5;
    goodness[v] = weights.alpha() * g_total + weights.beta() * g_spread;
    if (goodness[v] > best_goodness) best_goodness = goodness[v];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (candidate[v] && goodness[v] >= best_goodness - kTieTolerance / 2) {
      best = static_cast<VertexId>(v);
      break;
    }
  }
  return best;
}

}  // namespace meetpoint
