#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "error.hpp"
#include "oracle.hpp"
#include "sssp.hpp"
#include "test_support.hpp"

namespace meetpoint {
namespace {

TEST(FloydAllPairs, FillsTheUnknownEntryThroughAHub) {
  // Vertices 1 and 2 have no direct edge; the path through 0 costs 2 + 4.
  const FullMatrix m = floyd_all_pairs(testing::worked_example_graph(), 0);
  EXPECT_EQ(m.at(1, 2), Distance(6.0));
  EXPECT_EQ(m.at(2, 1), Distance(6.0));
}

TEST(FloydAllPairs, EdgelessGraph) {
  const Graph g = Graph::build(4, {}, {"distance"});
  const FullMatrix m = floyd_all_pairs(g, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) {
        EXPECT_EQ(m.at(i, j), Distance(0.0));
      } else {
        EXPECT_FALSE(m.at(i, j).reachable());
      }
    }
  }
}

TEST(FloydAllPairs, Errors) {
  const Graph g = Graph::build(2, {}, {"distance"});
  try {
    floyd_all_pairs(g, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownChannel);
  }
  const GridMap big = generate_grid_map(60, 60, 0.0, 1, 1);
  const auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  try {
    floyd_all_pairs(big.to_graph(), 0, past);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Timeout);
  }
}

TEST(FloydAllPairsProperty, SymmetricAndTriangleConsistent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 30, Directedness::Undirected);
    const FullMatrix m = floyd_all_pairs(g, 0);
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(m.at(i, i), Distance(0.0));
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(m.at(i, j), m.at(j, i));
        for (std::size_t k = 0; k < n; ++k) {
          EXPECT_LE(m.at(i, k).value(), m.at(i, j).value() + m.at(j, k).value());
        }
      }
    }
  }
}

TEST(FloydAllPairsProperty, MatchesDijkstraOnRealWeights) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> w(0.1, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = testing::uniform(rng, 2, 40);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 3 * n; ++i) {
      edges.push_back({static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n), {w(rng)}});
    }
    const Graph g = Graph::build(n, edges, {"distance"});
    const FullMatrix m = floyd_all_pairs(g, 0);
    for (VertexId s = 0; s < n; ++s) {
      const DistanceRow row = dijkstra_row(g, s, 0);
      for (VertexId v = 0; v < n; ++v) {
        if (!m.at(s, v).reachable()) {
          EXPECT_FALSE(row.distances[v].reachable());
          continue;
        }
        EXPECT_NEAR(row.distances[v].value(), m.at(s, v).value(),
                    1e-9 * std::max(1.0, m.at(s, v).value()));
      }
    }
  }
}

TEST(BruteForceDestination, WorkedExample) {
  const Graph g = testing::worked_example_graph();
  const std::vector<VertexId> users{0, 1};
  EXPECT_EQ(brute_force_destination(g, users, std::nullopt, {0.9, 0.1}), 0u);
}

TEST(BruteForceDestination, CoLocatedUsers) {
  const Graph g = testing::worked_example_graph();
  const std::vector<VertexId> users{3, 3, 3};
  EXPECT_EQ(brute_force_destination(g, users, std::nullopt, {}), 3u);
}

TEST(BruteForceDestination, NoCandidate) {
  const Graph g = Graph::build(2, {}, {"distance"});
  const std::vector<VertexId> users{0, 1};
  try {
    brute_force_destination(g, users, std::nullopt, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoCandidate);
  }
}

TEST(BruteForceDestinationProperty, AgreesWithSolveWithProfiles) {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 40, Directedness::Undirected, 2);
    const auto users = testing::random_users(rng, g, 2, 5);
    std::vector<std::vector<int>> scores(users.size(), std::vector<int>(2));
    for (auto& row : scores) {
      for (auto& s : row) s = static_cast<int>(rng() % 6);
    }
    scores[0][0] = 1 + static_cast<int>(rng() % 5);  // never all zero
    SolveOptions opts;
    opts.profile = PreferenceProfile(scores);
    opts.weights = ObjectiveWeights(0.3, 0.7);
    EXPECT_EQ(solve(g, users, opts).destination,
              brute_force_destination(g, users, opts.profile, opts.weights))
        << "trial " << trial;
  }
}

}  // namespace
}  // namespace meetpoint
