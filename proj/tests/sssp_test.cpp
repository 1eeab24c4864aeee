#include <random>

#include <gtest/gtest.h>

#include "error.hpp"
#include "grid_map.hpp"
#include "oracle.hpp"
#include "sssp.hpp"
#include "test_support.hpp"

namespace meetpoint {
namespace {

std::vector<Distance> dist(std::initializer_list<double> xs) {
  std::vector<Distance> out;
  for (double x : xs) out.push_back(std::isinf(x) ? Distance() : Distance(x));
  return out;
}

TEST(DijkstraRow, ReachesThirdVertexThroughFirst) {
  const Graph g = Graph::build(3, {{0, 1, {2}}, {0, 2, {4}}}, {"distance"},
                               Directedness::Undirected);
  EXPECT_EQ(dijkstra_row(g, 1, "distance").distances, dist({2, 0, 6}));
}

TEST(DijkstraRow, IsolatedSourceLeavesOthersUnreachable) {
  const Graph g = Graph::build(2, {}, {"distance"});
  const DistanceRow row = dijkstra_row(g, 0, "distance");
  EXPECT_EQ(row.distances[0], Distance(0.0));
  EXPECT_FALSE(row.distances[1].reachable());
}

TEST(DijkstraRow, Errors) {
  const Graph g = Graph::build(2, {}, {"distance"});
  EXPECT_THROW(dijkstra_row(g, 2, "distance"), Error);
  try {
    dijkstra_row(g, 0, "time");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownChannel);
  }
  try {
    dijkstra_row(g, 5, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSource);
  }
}

TEST(DijkstraRow, BackwardSearchFollowsIncomingEdges) {
  // 0 -> 1 -> 2 only.
  const Graph g = Graph::build(3, {{0, 1, {1}}, {1, 2, {5}}}, {"distance"});
  EXPECT_EQ(dijkstra_row(g, 2, 0).distances, dist({INFINITY, INFINITY, 0}));
  EXPECT_EQ(dijkstra_row(g, 2, 0, nullptr, {}, SearchDirection::Backward).distances,
            dist({6, 5, 0}));
}

TEST(DijkstraRowProperty, MatchesFloydOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dir = trial % 2 ? Directedness::Directed : Directedness::Undirected;
    const Graph g = testing::random_connected_graph(rng, 50, dir);
    const FullMatrix full = floyd_all_pairs(g, 0);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      const DistanceRow row = dijkstra_row(g, s, 0);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ASSERT_EQ(row.distances[v], full.at(s, v)) << "trial " << trial << " s " << s;
      }
    }
  }
}

TEST(DijkstraRowProperty, SettleOrderIsMonotoneAndRowIsTriangleConsistent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 40, Directedness::Directed);
    const auto source = static_cast<VertexId>(rng() % g.vertex_count());
    std::vector<std::pair<VertexId, double>> settled;
    const DistanceRow row = dijkstra_row(g, source, 0, nullptr, [&](VertexId v, double d) {
      settled.emplace_back(v, d);
    });
    for (std::size_t i = 1; i < settled.size(); ++i) {
      ASSERT_LE(settled[i - 1].second, settled[i].second);
      if (settled[i - 1].second == settled[i].second) {
        ASSERT_LT(settled[i - 1].first, settled[i].first);  // tie -> lower id first
      }
    }
    EXPECT_EQ(row.distances[source], Distance(0.0));
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (!row.distances[u].reachable()) continue;
      for (std::size_t e = g.out_begin(u); e < g.out_end(u); ++e) {
        EXPECT_LE(row.distances[g.target(e)], row.distances[u] + g.weight(e, 0));
      }
    }
    EXPECT_EQ(dijkstra_row(g, source, 0), row);  // idempotent
  }
}

TEST(BuildPartialMatrix, WorkedExampleRows) {
  const Graph g = testing::worked_example_graph();
  const std::vector<VertexId> users{0, 1};
  const AdjacentMatrix m = build_partial_matrix(g, users, "distance");
  ASSERT_EQ(m.user_count(), 2u);
  EXPECT_EQ(m.vertex_count(), 4u);
  EXPECT_EQ(m.row(0).distances, dist({0, 2, 4, 1}));
  EXPECT_EQ(m.row(1).distances, dist({2, 0, 6, 3}));
  EXPECT_EQ(m.channel(), "distance");
}

TEST(BuildPartialMatrix, SingleSourceAndCoLocatedUsers) {
  const Graph g = testing::worked_example_graph();
  const std::vector<VertexId> one{2};
  EXPECT_EQ(build_partial_matrix(g, one, 0).user_count(), 1u);

  const std::vector<VertexId> twins{3, 3};
  const AdjacentMatrix m = build_partial_matrix(g, twins, 0);
  EXPECT_EQ(m.row(0), m.row(1));
}

TEST(BuildPartialMatrix, Errors) {
  const Graph g = testing::worked_example_graph();
  const std::vector<VertexId> none;
  try {
    build_partial_matrix(g, none, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySources);
  }
  const std::vector<VertexId> bad{0, 9};
  EXPECT_THROW(build_partial_matrix(g, bad, 0), Error);
}

TEST(BuildPartialMatrix, ParallelMatchesSequential) {
  std::mt19937_64 rng(5);
  const Graph g = testing::random_connected_graph(rng, 50, Directedness::Undirected);
  const auto users = testing::random_users(rng, g, 5, 9);
  const AdjacentMatrix seq = build_partial_matrix(g, users, 0);
  PartialMatrixOptions opts;
  opts.parallelism = 4;
  EXPECT_EQ(build_partial_matrix(g, users, 0, opts), seq);
}

TEST(BuildPartialMatrix, WorkGrowsLinearlyWithUsers) {
  const GridMap map = generate_grid_map(60, 60, 0.1, 16, 3);
  const Graph g = map.to_graph();
  const auto& starts = map.user_starts();
  for (std::size_t k = 1; k <= 8; ++k) {
    SearchStats half, full;
    build_partial_matrix(g, std::span(starts).first(k), 0, {1, &half});
    build_partial_matrix(g, std::span(starts).first(2 * k), 0, {1, &full});
    EXPECT_LE(static_cast<double>(full.pops), 2.1 * static_cast<double>(half.pops));
    EXPECT_EQ(full.settled, 2 * k * g.vertex_count());
  }
}

}  // namespace
}  // namespace meetpoint
