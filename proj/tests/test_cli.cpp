#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run gk_cli(const std::string& args) {
  const std::string cmd = std::string(GK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, Graph) {
  const auto r = gk_cli("graph 'G2(3)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "vertices: 2 3 7 13")) << r.out;
  EXPECT_TRUE(has(r.out, "edges: 2-3")) << r.out;
}

TEST(Cli, GraphJsonAndDot) {
  const auto j = gk_cli("graph 'E8(2)' --json");
  ASSERT_EQ(j.status, 0);
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["group"], "E8(2)");
  const auto d = gk_cli("graph 'PSL2(49)' --dot");
  EXPECT_EQ(d.status, 0);
  EXPECT_TRUE(has(d.out, "graph \"PSL2(49)\"")) << d.out;
  EXPECT_NE(gk_cli("graph 'G2(3)' --dot --json").status, 0);
}

TEST(Cli, Components) {
  const auto r = gk_cli("components 'Sz(8)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "s = 4")) << r.out;
  EXPECT_TRUE(has(r.out, "pi_1 = {2}")) << r.out;
}

TEST(Cli, Coclique) {
  const auto r = gk_cli("coclique 'G2(3)'");
  EXPECT_TRUE(has(r.out, "t(G2(3)) = 3")) << r.out;
  EXPECT_TRUE(has(r.out, "witness: {2,7,13}")) << r.out;
  const auto at = gk_cli("coclique 'E8(2)' --at 2");
  EXPECT_TRUE(has(at.out, "t(2, E8(2)) = 5")) << at.out;
}

TEST(Cli, Compare) {
  const auto same = gk_cli("compare 'Alt(7)' 'PSL2(49)'");
  EXPECT_EQ(same.status, 0);
  EXPECT_TRUE(has(same.out, "equal")) << same.out;
  const auto diff = gk_cli("compare 'PSL3(4)' 'PSL2(49)'");
  EXPECT_EQ(diff.status, 1);
  EXPECT_TRUE(has(diff.out, "edges only in PSL2(49): 2-3")) << diff.out;
}

TEST(Cli, Verify) {
  const auto one = gk_cli("verify c02");
  EXPECT_EQ(one.status, 0);
  EXPECT_TRUE(has(one.out, "c02  g2_3-psl2_13  PASS")) << one.out;
  const auto d = gk_cli("verify c14");
  EXPECT_EQ(d.status, 0);
  EXPECT_TRUE(has(d.out, "!! c14")) << d.out;
  const auto scaled = gk_cli("verify nagell --grid-scale 0.01 --json");
  EXPECT_EQ(scaled.status, 0);
  EXPECT_EQ(nlohmann::json::parse(scaled.out)["evidence"]["x_max"], 10000);
  EXPECT_NE(gk_cli("verify").status, 0);
}

TEST(Cli, VerifyFailsWithMissingData) {
  const auto r = gk_cli(std::string("--data ") + GK_TEST_DATA_DIR + "/empty.json verify c14");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r.out, "FAIL")) << r.out;
}

TEST(Cli, Search) {
  const auto r = gk_cli("search --pi 2,3,5");
  EXPECT_EQ(r.status, 0);
  for (const char* g : {"Alt(5)", "Alt(6)", "PSL2(4)", "PSL2(9)"}) EXPECT_TRUE(has(r.out, std::string(g) + "\n")) << g;
  EXPECT_EQ(gk_cli("search --pi 2,4").status, 2);
}

TEST(Cli, Oracle) {
  const auto r = gk_cli("oracle 'PSL2(13)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "agree")) << r.out;
  EXPECT_EQ(gk_cli("oracle 'E8(2)'").status, 2);
}

TEST(Cli, Compact) {
  const auto r = gk_cli("compact F4");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "R_12")) << r.out;
  const auto e = gk_cli("compact E8 --expand 2");
  EXPECT_TRUE(has(e.out, "5-41")) << e.out;
  EXPECT_FALSE(has(e.out, "5-241")) << e.out;
  EXPECT_EQ(gk_cli("compact E7").status, 2);
}

TEST(Cli, Errors) {
  EXPECT_EQ(gk_cli("graph 'Sz(16)'").status, 2);
  EXPECT_TRUE(has(gk_cli("graph 'Sz(16)'").out, "error:"));
  EXPECT_EQ(gk_cli("graph 'PSU4(4)'").status, 2);
  EXPECT_NE(gk_cli("").status, 0);
}
