#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;
using meetpoint::testing::read_text;
using meetpoint::testing::source_path;

struct Result {
  int exit_code = -1;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd =
      "MEETPOINT_NO_COLOR=1 '" + std::string(MEETPOINT_CLI) + "' " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (const std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string quoted(const std::string& relative) { return "'" + source_path(relative) + "'"; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "meetpoint_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(CliSolve, WorkedExample) {
  const Result r = cli("solve --graph " + quoted("tests/data/graphs/worked_example.graph") +
                       " --alpha 0.9 --beta 0.1");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("  0: 0 2 4 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("  1: 2 0 6 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("d_total 2 2 10 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("d_sim 2 2 2 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("destination 0\n"), std::string::npos);
}

TEST(CliSolve, OneUserMapPicksTheirCell) {
  const fs::path map = scratch("one_user.txt");
  {
    std::FILE* f = std::fopen(map.c_str(), "w");
    std::fputs("#####\n#  U#\n#   #\n#####\n", f);
    std::fclose(f);
  }
  const Result r = cli("solve --map '" + map.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("destination_cell 1 3\n"), std::string::npos) << r.out;
}

TEST(CliSolve, DisconnectedUsersFail) {
  const fs::path map = scratch("split.txt");
  {
    std::FILE* f = std::fopen(map.c_str(), "w");
    std::fputs("U#U\n", f);
    std::fclose(f);
  }
  const Result r = cli("solve --map '" + map.string() + "'");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("NoCandidate"), std::string::npos) << r.out;
}

TEST(CliSolve, ScoresBlendChannels) {
  const fs::path map = scratch("scored.txt");
  {
    std::FILE* f = std::fopen(map.c_str(), "w");
    std::fputs("U   U\n", f);
    std::fclose(f);
  }
  const Result r = cli("solve --map '" + map.string() +
                       "' --channels distance,time --scores '4,3;5,4'");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("channel 0.5625*distance+0.4375*time\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("destination 2\n"), std::string::npos);
  EXPECT_EQ(cli("solve --map '" + map.string() + "' --scores '4;5;6'").exit_code, 1);
}

TEST(CliSolve, MissingInputFails) {
  EXPECT_NE(cli("solve").exit_code, 0);
  EXPECT_EQ(cli("solve --map /nonexistent/map.txt").exit_code, 1);
}

TEST(CliSimulate, NoUsersFails) {
  const fs::path map = scratch("empty.txt");
  {
    std::FILE* f = std::fopen(map.c_str(), "w");
    std::fputs("#####\n#   #\n#####\n", f);
    std::fclose(f);
  }
  const Result r = cli("simulate --map '" + map.string() + "'");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("NoUsers"), std::string::npos) << r.out;
}

TEST(CliSimulate, TickBudgetExceededExitsNonZero) {
  const fs::path map = scratch("long.txt");
  {
    std::FILE* f = std::fopen(map.c_str(), "w");
    std::fputs("U          U\n", f);
    std::fclose(f);
  }
  const Result r = cli("simulate --map '" + map.string() + "' --max-ticks 2");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("outcome max_ticks_exceeded\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("MaxTicksExceeded"), std::string::npos);
}

class CliGolden : public ::testing::TestWithParam<const char*> {};

TEST_P(CliGolden, TraceMatchesPinnedFile) {
  const std::string name = GetParam();
  const fs::path out = scratch(name + ".trace");
  const Result r = cli("simulate --map " + quoted("maps/" + name + ".txt") + " --out '" +
                       out.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("outcome converged\n"), std::string::npos);
  EXPECT_EQ(read_text(out.string()), read_text(source_path("tests/data/golden/" + name + ".trace")));
}

INSTANTIATE_TEST_SUITE_P(Maps, CliGolden,
                         ::testing::Values("open_22x10_u2", "open_22x10_u3", "open_22x10_u4",
                                           "open_22x10_u5", "open_22x10_u6",
                                           "walled_88x27_random", "walled_88x27_stick"));

TEST(CliRender, PinnedRenderingIsByteIdentical) {
  const fs::path out = scratch("render.txt");
  const std::string args = "render " + quoted("tests/data/golden/open_22x10_u2.trace") +
                           " --map " + quoted("maps/open_22x10_u2.txt");
  ASSERT_EQ(cli(args + " --out '" + out.string() + "'").exit_code, 0);
  const std::string golden = read_text(source_path("tests/data/golden/open_22x10_u2.render"));
  EXPECT_EQ(read_text(out.string()), golden);
  EXPECT_EQ(cli(args).out, golden);
}

TEST(CliRender, WrongMapFails) {
  const Result r = cli("render " + quoted("tests/data/golden/open_22x10_u2.trace") + " --map " +
                       quoted("maps/walled_88x27_random.txt"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("InconsistentTrace"), std::string::npos) << r.out;
}

TEST(CliBench, SingleRowCsv) {
  const fs::path out = scratch("bench.csv");
  const Result r = cli("bench --map 22x10 --users 2 --reps 1 --floyd-timeout 0 --out '" +
                       out.string() + "'");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const std::string csv = read_text(out.string());
  ASSERT_EQ(csv.rfind("map,users,md_seconds,floyd_seconds,parallelism\n22x10,2,", 0), 0u) << csv;
  EXPECT_NE(csv.find(",skipped,1\n"), std::string::npos) << csv;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(CliBench, FloydColumnIsANumberOrCensored) {
  const Result r = cli("bench --map 22x10 --users 2,3 --reps 1 --floyd-timeout 30");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(r.out.find("skipped"), std::string::npos) << r.out;
}

}  // namespace
