#pragma once

#include <optional>
#include <span>
#include <vector>

#include "reachability.hpp"
#include "sssp.hpp"

namespace meetpoint {

// Two combined scores closer than this are a tie (lowest vertex id wins).
// Combined values are sums of proportions in [0, 1].
inline constexpr double kTieTolerance = 1e-12;

enum class ScoreKind { Total, Similarity, Combined };

struct ScoreVector {
  std::vector<Distance> values;  // Unreachable where not every user reaches v
  ScoreKind kind = ScoreKind::Total;
};

// Convex weights of the total-travel and equal-travel terms.
class ObjectiveWeights {
 public:
  // Throws InvalidArgument unless alpha, beta in [0,1] and alpha + beta = 1.
  ObjectiveWeights(double alpha, double beta);
  ObjectiveWeights() : ObjectiveWeights(0.5, 0.5) {}

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

// Per-user, per-objective priority scores in 0..5.
class PreferenceProfile {
 public:
  static constexpr int kMaxScore = 5;

  // scores[user][objective]. Throws InvalidArgument on ragged rows or
  // out-of-range scores, AllZeroScores if every score is zero.
  explicit PreferenceProfile(std::vector<std::vector<int>> scores);

  std::size_t user_count() const { return scores_.size(); }
  std::size_t objective_count() const {
    return scores_.empty() ? 0 : scores_.front().size();
  }
  int score(std::size_t user, std::size_t objective) const {
    return scores_[user][objective];
  }
  const std::vector<std::vector<int>>& scores() const { return scores_; }

 private:
  std::vector<std::vector<int>> scores_;
};

// Sum of a column over user rows; Unreachable if any entry is.
ScoreVector total_distance(const AdjacentMatrix& matrix);

// Sum over unordered user pairs of |M[a][v] - M[b][v]|.
ScoreVector similarity_penalty(const AdjacentMatrix& matrix);

// (1 - x_i / sum) / 2. Throws NonFiniteEntry, InvalidArgument (negative),
// ZeroSum.
std::vector<double> normalize(std::span<const double> values);

// Share of all priority points given to each objective.
std::vector<double> priority_weights(const PreferenceProfile& profile);

// Entry-wise convex combination. Throws ShapeMismatch, InvalidArgument when
// weights do not sum to 1.
AdjacentMatrix blend_objectives(std::span<const AdjacentMatrix> matrices,
                                std::span<const double> weights);

// alpha * total/sum(total) + beta * sim/sum(sim) over mutually reachable
// vertices. A zero similarity sum drops that term. Throws LengthMismatch,
// NoMutuallyReachableVertex.
ScoreVector combine(const ScoreVector& total, const ScoreVector& similarity,
                    const ObjectiveWeights& weights);

// Lowest-id minimiser among vertices every user reaches. Throws NoCandidate.
VertexId select_destination(const ScoreVector& combined,
                            const ReachabilitySet& reachability);

struct SolveOptions {
  ObjectiveWeights weights;
  std::optional<PreferenceProfile> profile;  // absent: distance channel only
  std::size_t parallelism = 1;
  SearchStats* stats = nullptr;
};

struct Solution {
  std::vector<AdjacentMatrix> channel_matrices;
  std::vector<double> channel_weights;
  AdjacentMatrix matrix;  // blended
  ScoreVector total;
  ScoreVector similarity;
  ScoreVector combined;
  VertexId destination = 0;
};

// Per-channel partial matrices, blend by priority weights, score, argmin.
Solution solve(const Graph& graph, std::span<const VertexId> users,
               const SolveOptions& options = {});

}  // namespace meetpoint
