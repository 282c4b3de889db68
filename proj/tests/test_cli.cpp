#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(CRYSRIG_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(CRYSRIG_FIXTURES "/") + name; }

std::string field(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return "<missing " + key + ">";
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check " + fixture("gamma4_laman.txt") + " --class laman").status, 0);
  const CliRun no = run("check " + fixture("gamma4_flexible.txt") + " --class laman");
  EXPECT_EQ(no.status, 1);
  EXPECT_EQ(field(no.out, "witness"), "2 3");
  EXPECT_EQ(run("check " + fixture("cone3_loop.txt") + " --class laman").status, 0);
  EXPECT_EQ(run("check " + fixture("identity_loop.txt") + " --class laman").status, 1);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("check /nonexistent/graph.txt --class laman").status, 2);
  EXPECT_EQ(run("check " + fixture("gamma4_laman.txt") + " --class nonsense").status, 2);
  EXPECT_EQ(run("check " + fixture("gamma4_laman.txt") + " --class laman --edges 9").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, WitnessRoundTripsThroughEdgeRestriction) {
  const CliRun no = run("check " + fixture("gamma4_flexible.txt") + " --class laman");
  std::string ids = field(no.out, "witness");
  for (char& c : ids) c = c == ' ' ? ',' : c;
  const CliRun sub = run("check " + fixture("gamma4_flexible.txt") + " --class laman --edges " + ids);
  EXPECT_EQ(sub.status, 1);
  EXPECT_EQ(field(sub.out, "edges"), "2");
  EXPECT_EQ(field(sub.out, "sparse"), "no");
}

TEST(Cli, RankSummary) {
  const CliRun r = run("rank " + fixture("gamma4_laman.txt"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(field(r.out, "summary"), "rank 3 / 3 rows, nullity 1");
  EXPECT_EQ(field(r.out, "rigidity consistent"), "yes");
  const CliRun g2 = run("rank " + fixture("gamma2_laman.txt"));
  EXPECT_EQ(field(g2.out, "summary"), "rank 7 / 7 rows, nullity 1");
}

TEST(Cli, RealizeIsDeterministic) {
  const CliRun a = run("realize " + fixture("gamma4_laman.txt") + " --seed 3");
  const CliRun b = run("realize " + fixture("gamma4_laman.txt") + " --seed 3");
  const CliRun c = run("realize " + fixture("gamma4_laman.txt") + " --seed 4");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(field(a.out, "p1"), field(c.out, "p1"));
  EXPECT_EQ(run("realize " + fixture("gamma4_flexible.txt")).status, 2);
}

TEST(Cli, RenderWritesOneCirclePerLiftVertex) {
  const std::string out = ::testing::TempDir() + "crysrig_cli_render.svg";
  const CliRun r = run("render " + fixture("gamma4_laman.txt") + " --box 0 1 0 1 --out " + out);
  ASSERT_EQ(r.status, 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string svg = buf.str();
  std::size_t circles = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  EXPECT_EQ(std::to_string(circles), field(r.out, "lift vertices"));
}

TEST(Cli, CircuitReportsAnOverBracedSubgraph) {
  const CliRun r = run("circuit " + fixture("gamma4_flexible.txt"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(field(r.out, "circuit"), "2 3");
  EXPECT_EQ(run("circuit " + fixture("gamma4_laman.txt")).status, 0);
}

TEST(Cli, SelftestAtSmallScale) {
  const CliRun r = run("selftest --scale 0.02");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("PASS criterion 11"), std::string::npos);
  EXPECT_EQ(run("selftest --scale 0.05 --inject-fault").status, 1);
}
