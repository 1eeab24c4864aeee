#include <gtest/gtest.h>

#include "error.hpp"
#include "graph_file.hpp"
#include "test_support.hpp"

namespace meetpoint {
namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_graph_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::InvalidArgument;
}

TEST(ParseGraphFile, WorkedExampleFixture) {
  const Instance inst =
      parse_graph_file(testing::read_text(testing::source_path("tests/data/graphs/worked_example.graph")));
  EXPECT_EQ(inst.graph.vertex_count(), 4u);
  EXPECT_EQ(inst.graph.edge_count(), 6u);
  EXPECT_EQ(inst.users, (std::vector<VertexId>{0, 1}));
  EXPECT_FALSE(inst.profile.has_value());
  EXPECT_EQ(inst.graph.neighbors(0, 0), (std::vector<Arc>{{1, 2}, {2, 4}, {3, 1}}));
}

TEST(ParseGraphFile, DirectedByDefaultWithChannelsAndScores) {
  const Instance inst = parse_graph_file(
      "# two channels\n"
      "v 3 distance time\n"
      "e 0 1 2 5   # slow road\n"
      "e 1 2 1.5 1\n"
      "u 0 4 3\n"
      "u 2 5 4\n");
  EXPECT_EQ(inst.graph.edge_count(), 2u);
  EXPECT_TRUE(inst.graph.neighbors(1, 0).size() == 1);
  EXPECT_EQ(inst.graph.neighbors(1, "time"), (std::vector<Arc>{{2, 1}}));
  ASSERT_TRUE(inst.profile.has_value());
  EXPECT_EQ(inst.profile->scores(), (std::vector<std::vector<int>>{{4, 3}, {5, 4}}));
}

TEST(ParseGraphFile, Errors) {
  EXPECT_EQ(code_of(""), ErrorCode::Parse);
  EXPECT_EQ(code_of("e 0 1 1\n"), ErrorCode::Parse);
  EXPECT_EQ(code_of("v 2 distance\nv 2 distance\n"), ErrorCode::Parse);
  EXPECT_EQ(code_of("v 2 distance\ne 0 1\n"), ErrorCode::Parse);
  EXPECT_EQ(code_of("v 2 distance\ne 0 1 x\n"), ErrorCode::Parse);
  EXPECT_EQ(code_of("v 2 distance\nw 0\n"), ErrorCode::Parse);
  EXPECT_EQ(code_of("v 2 distance\ne 0 1 1\nundirected\n"), ErrorCode::Parse);
  EXPECT_EQ(code_of("v 2 distance\nu 0 3\nu 1\n"), ErrorCode::Parse);
  EXPECT_EQ(code_of("v 2 distance\ne 0 5 1\n"), ErrorCode::InvalidEdgeEndpoint);
  EXPECT_EQ(code_of("v 2 distance\ne 0 1 -1\n"), ErrorCode::NegativeWeight);
  EXPECT_EQ(code_of("v 2 distance\nu 4\n"), ErrorCode::InvalidSource);
  EXPECT_EQ(code_of("v 2 time\n"), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of("v 2 distance\nu 0 0\nu 1 0\n"), ErrorCode::AllZeroScores);
}

}  // namespace
}  // namespace meetpoint
