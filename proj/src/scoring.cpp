#include "scoring.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace meetpoint {

namespace {

void require_rows(const AdjacentMatrix& matrix) {
  if (matrix.user_count() == 0) {
    fail(ErrorCode::EmptyMatrix, "adjacent matrix has no rows");
  }
}

bool column_reachable(const AdjacentMatrix& matrix, VertexId v) {
  for (const auto& row : matrix.rows()) {
    if (!row.distances[v].reachable()) return false;
  }
  return true;
}

}  // namespace

ObjectiveWeights::ObjectiveWeights(double alpha, double beta)
    : alpha_(alpha), beta_(beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "alpha and beta must lie in [0, 1]");
  }
  if (std::abs(alpha + beta - 1.0) > 1e-9) {
    fail(ErrorCode::InvalidArgument, "alpha + beta must equal 1");
  }
}

PreferenceProfile::PreferenceProfile(std::vector<std::vector<int>> scores)
    : scores_(std::move(scores)) {
  if (scores_.empty() || scores_.front().empty()) {
    fail(ErrorCode::InvalidArgument, "profile needs at least one user and objective");
  }
  bool any = false;
  for (const auto& row : scores_) {
    if (row.size() != scores_.front().size()) {
      fail(ErrorCode::InvalidArgument, "every user must score every objective");
    }
    for (int s : row) {
      if (s < 0 || s > kMaxScore) {
        fail(ErrorCode::InvalidArgument,
             "priority score " + std::to_string(s) + " outside 0..5");
      }
      any = any || s > 0;
    }
  }
  if (!any) fail(ErrorCode::AllZeroScores, "all priority scores are zero");
}

ScoreVector total_distance(const AdjacentMatrix& matrix) {
  require_rows(matrix);
  ScoreVector out{std::vector<Distance>(matrix.vertex_count()), ScoreKind::Total};
  for (VertexId v = 0; v < matrix.vertex_count(); ++v) {
    if (!column_reachable(matrix, v)) continue;
    double sum = 0;
    for (const auto& row : matrix.rows()) sum += row.distances[v].value();
    out.values[v] = Distance(sum);
  }
  return out;
}

ScoreVector similarity_penalty(const AdjacentMatrix& matrix) {
  require_rows(matrix);
  const auto& rows = matrix.rows();
  ScoreVector out{std::vector<Distance>(matrix.vertex_count()),
                  ScoreKind::Similarity};
  for (VertexId v = 0; v < matrix.vertex_count(); ++v) {
    if (!column_reachable(matrix, v)) continue;
    double sum = 0;
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        sum += std::abs(rows[a].distances[v].value() - rows[b].distances[v].value());
      }
    }
    out.values[v] = Distance(sum);
  }
  return out;
}

std::vector<double> normalize(std::span<const double> values) {
  double sum = 0;
  for (double x : values) {
    if (!std::isfinite(x)) fail(ErrorCode::NonFiniteEntry, "cannot normalise a non-finite entry");
    if (x < 0) fail(ErrorCode::InvalidArgument, "cannot normalise a negative entry");
    sum += x;
  }
  if (sum == 0) fail(ErrorCode::ZeroSum, "cannot normalise a vector summing to zero");
  std::vector<double> out;
  out.reserve(values.size());
  for (double x : values) out.push_back((1.0 - x / sum) / 2.0);
  return out;
}

std::vector<double> priority_weights(const PreferenceProfile& profile) {
  std::vector<double> per_objective(profile.objective_count(), 0.0);
  double all = 0;
  for (const auto& row : profile.scores()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      per_objective[k] += row[k];
      all += row[k];
    }
  }
  if (all == 0) fail(ErrorCode::AllZeroScores, "all priority scores are zero");
  for (double& w : per_objective) w /= all;
  return per_objective;
}

AdjacentMatrix blend_objectives(std::span<const AdjacentMatrix> matrices,
                                std::span<const double> weights) {
  if (matrices.empty() || matrices.size() != weights.size()) {
    fail(ErrorCode::ShapeMismatch, "need exactly one weight per matrix");
  }
  double weight_sum = 0;
  for (double w : weights) {
    if (!(w >= 0.0)) fail(ErrorCode::InvalidArgument, "blend weights must be >= 0");
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    fail(ErrorCode::InvalidArgument, "blend weights must sum to 1");
  }
  const AdjacentMatrix& base = matrices.front();
  for (const auto& m : matrices) {
    if (m.user_count() != base.user_count() || m.vertex_count() != base.vertex_count()) {
      fail(ErrorCode::ShapeMismatch, "matrices differ in users or vertices");
    }
    for (std::size_t u = 0; u < m.user_count(); ++u) {
      if (m.row(u).source != base.row(u).source) {
        fail(ErrorCode::ShapeMismatch, "matrices list users in different order");
      }
    }
  }
  if (matrices.size() == 1) return base;

  std::ostringstream name;
  name.precision(17);
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    if (k) name << '+';
    name << weights[k] << '*' << matrices[k].channel();
  }

  // base + sum_k w_k (m_k - base): equal inputs blend to the input exactly.
  std::vector<DistanceRow> rows = base.rows();
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (VertexId v = 0; v < base.vertex_count(); ++v) {
      const double origin = base.at(u, v).value();
      double acc = origin;
      bool reachable = base.at(u, v).reachable();
      for (std::size_t k = 1; k < matrices.size() && reachable; ++k) {
        const Distance d = matrices[k].at(u, v);
        reachable = d.reachable();
        if (reachable) acc += weights[k] * (d.value() - origin);
      }
      rows[u].distances[v] = reachable ? Distance(acc) : Distance::unreachable();
    }
  }
  return AdjacentMatrix(std::move(rows), name.str());
}

ScoreVector combine(const ScoreVector& total, const ScoreVector& similarity,
                    const ObjectiveWeights& weights) {
  if (total.values.size() != similarity.values.size()) {
    fail(ErrorCode::LengthMismatch, "score vectors differ in length");
  }
  const std::size_t n = total.values.size();
  double total_sum = 0;
  double sim_sum = 0;
  bool any = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (!total.values[v].reachable() || !similarity.values[v].reachable()) continue;
    any = true;
    total_sum += total.values[v].value();
    sim_sum += similarity.values[v].value();
  }
  if (!any) {
    fail(ErrorCode::NoMutuallyReachableVertex, "no vertex is reachable by every user");
  }

  ScoreVector out{std::vector<Distance>(n), ScoreKind::Combined};
  for (std::size_t v = 0; v < n; ++v) {
    if (!total.values[v].reachable() || !similarity.values[v].reachable()) continue;
    double score = 0;
    if (total_sum > 0) score += weights.alpha() * (total.values[v].value() / total_sum);
    if (sim_sum > 0) score += weights.beta() * (similarity.values[v].value() / sim_sum);
    out.values[v] = Distance(score);
  }
  return out;
}

VertexId select_destination(const ScoreVector& combined,
                            const ReachabilitySet& reachability) {
  const std::size_t n = combined.values.size();
  if (reachability.vertex_count() != n) {
    fail(ErrorCode::LengthMismatch, "reachability and scores differ in length");
  }
  Distance best;
  for (VertexId v = 0; v < n; ++v) {
    if (reachability.mutually_reachable(v) && combined.values[v] < best) {
      best = combined.values[v];
    }
  }
  if (!best.reachable()) {
    fail(ErrorCode::NoCandidate, "no vertex is reachable by every user");
  }
  for (VertexId v = 0; v < n; ++v) {
    if (reachability.mutually_reachable(v) && combined.values[v].reachable() &&
        combined.values[v].value() <= best.value() + kTieTolerance) {
      return v;
    }
  }
  fail(ErrorCode::NoCandidate, "no candidate destination");
}

Solution solve(const Graph& graph, std::span<const VertexId> users,
               const SolveOptions& options) {
  if (users.empty()) fail(ErrorCode::EmptySources, "no users to solve for");

  Solution s;
  std::vector<std::size_t> channels;
  if (options.profile) {
    const auto& profile = *options.profile;
    if (profile.user_count() != users.size()) {
      fail(ErrorCode::ShapeMismatch, "profile has " + std::to_string(profile.user_count()) +
                                         " users, instance has " +
                                         std::to_string(users.size()));
    }
    if (profile.objective_count() != graph.channel_count()) {
      fail(ErrorCode::ShapeMismatch, "profile scores " +
                                         std::to_string(profile.objective_count()) +
                                         " objectives, graph has " +
                                         std::to_string(graph.channel_count()) + " channels");
    }
    const auto weights = priority_weights(profile);
    for (std::size_t c = 0; c < weights.size(); ++c) {
      if (weights[c] > 0) {
        channels.push_back(c);
        s.channel_weights.push_back(weights[c]);
      }
    }
  } else {
    channels.push_back(0);
    s.channel_weights.push_back(1.0);
  }

  PartialMatrixOptions build{options.parallelism, options.stats};
  for (std::size_t c : channels) {
    s.channel_matrices.push_back(build_partial_matrix(graph, users, c, build));
  }
  s.matrix = blend_objectives(s.channel_matrices, s.channel_weights);
  const ReachabilitySet reach(s.matrix);
  bool any = false;
  for (VertexId v = 0; v < graph.vertex_count() && !any; ++v) {
    any = reach.mutually_reachable(v);
  }
  if (!any) fail(ErrorCode::NoCandidate, "no vertex is reachable by every user");
  s.total = total_distance(s.matrix);
  s.similarity = similarity_penalty(s.matrix);
  s.combined = combine(s.total, s.similarity, options.weights);
  s.destination = select_destination(s.combined, reach);
  return s;
}

}  // namespace meetpoint
